#include <gtest/gtest.h>

#include <random>

#include "mukade/partition.hpp"

using namespace mukade;

namespace {
using Cells = std::set<std::pair<int, int>>;
NTuple T(const std::string& s) { return parse_ntuple(s); }
}  // namespace

TEST(ArmLeg, Examples) {
  EXPECT_EQ(Partition({4, 4, 2, 1}).arm_leg(2, 3), std::make_pair(1, 0));
  EXPECT_EQ(Partition().arm_leg(1, 1), std::make_pair(-1, -1));
  EXPECT_EQ(Partition({3, 3, 1}).arm_leg(1, 1), std::make_pair(2, 2));
}

TEST(AddRemove, Examples) {
  auto [a, r] = add_remove_sets(Partition({3, 3, 1}));
  EXPECT_EQ(a, (Cells{{1, 4}, {3, 2}, {4, 1}}));
  EXPECT_EQ(r, (Cells{{2, 3}, {3, 1}}));
  auto [a0, r0] = add_remove_sets(Partition());
  EXPECT_EQ(a0, (Cells{{1, 1}}));
  EXPECT_TRUE(r0.empty());
  auto [a1, r1] = add_remove_sets(Partition({1}));
  EXPECT_EQ(a1, (Cells{{1, 2}, {2, 1}}));
  EXPECT_EQ(r1, (Cells{{1, 1}}));
}

TEST(AddRemove, Consistency) {
  for (int n = 0; n <= 7; ++n)
    for (auto& l : partitions(n)) {
      auto [a, r] = add_remove_sets(l);
      for (auto [i, j] : a) {
        std::vector<int> p = l.parts();
        if (i > static_cast<int>(p.size())) p.push_back(0);
        ++p[i - 1];
        EXPECT_EQ(p[i - 1], j);
        EXPECT_TRUE(std::is_sorted(p.rbegin(), p.rend())) << l.str();
      }
      for (auto [i, j] : r) {
        std::vector<int> p = l.parts();
        EXPECT_EQ(p[i - 1], j);
        --p[i - 1];
        EXPECT_TRUE(std::is_sorted(p.rbegin(), p.rend())) << l.str();
      }
      // every addable cell outside, every removable inside
      for (auto c : a) EXPECT_FALSE(l.contains_cell(c.first, c.second));
      for (auto c : r) EXPECT_TRUE(l.contains_cell(c.first, c.second));
    }
}

TEST(Conjugate, InvolutionAndN) {
  for (int n = 0; n <= 8; ++n)
    for (auto& l : partitions(n)) {
      EXPECT_EQ(l.conjugate().conjugate(), l);
      int s = 0;
      Partition lc = l.conjugate();
      for (int c : lc.parts()) s += c * (c - 1) / 2;
      EXPECT_EQ(l.n(), s);
    }
}

TEST(Counting, Ntuples) {
  EXPECT_EQ(partitions(5).size(), 7u);
  EXPECT_EQ(count_ntuples(2, 2), 5);
  EXPECT_EQ(count_ntuples(3, 2), 9);
  EXPECT_EQ(static_cast<long>(ntuples(3, 3).size()), count_ntuples(3, 3));
}

TEST(StarCompare, Examples) {
  EXPECT_EQ(star_compare(T("[[],[],[2]]"), T("[[],[1],[1]]")), Order::greater);
  EXPECT_EQ(star_compare(T("[[1],[],[1]]"), T("[[],[2],[]]")), Order::incomparable);
  EXPECT_EQ(star_compare(T("[[2]]"), T("[[1,1]]")), Order::incomparable);
  EXPECT_EQ(star_compare(T("[[2]]"), T("[[2]]")), Order::equal);
  EXPECT_THROW(star_compare(T("[[2]]"), T("[[2],[]]")), std::invalid_argument);
}

TEST(StarCompare, AntisymmetryAndTransitivity) {
  auto all = ntuples(3, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (auto& a : all)
    for (auto& b : all) {
      auto ab = star_compare(a, b), ba = star_compare(b, a);
      EXPECT_EQ(ab == Order::greater, ba == Order::less);
    }
  for (int it = 0; it < 2000; ++it) {
    auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
    if (star_compare(a, b) == Order::greater && star_compare(b, c) == Order::greater)
      EXPECT_EQ(star_compare(a, c), Order::greater);
  }
}

TEST(TruncateB, Examples) {
  EXPECT_EQ(truncate_B(Partition({5, 5, 4, 4, 4, 1, 1}), 2, 1), Partition({3, 2, 2, 2}));
  EXPECT_EQ(truncate_B(Partition({4, 2, 1}), 0, 0), Partition({4, 2, 1}));
  EXPECT_EQ(truncate_B(Partition({3, 1}), 1, 1), Partition());
}

TEST(Flaming, Examples) {
  auto e = flaming_factors(Partition());
  EXPECT_EQ(e.f, Scalar(1));
  EXPECT_EQ(e.g, Scalar(1));
  auto one = flaming_factors(Partition({1}));
  EXPECT_EQ(one.f, parse_scalar("-p/s"));
  EXPECT_EQ(one.g, Scalar(1));
  auto two = flaming_factors(Partition({2}));
  // n(l')=1, |l|=2: q^2 t^-1
  EXPECT_EQ(two.f, parse_scalar("p^4/s^2"));
  EXPECT_EQ(two.g, Scalar::q());
}

TEST(Text, RoundTrip) {
  EXPECT_EQ(Partition({4, 4, 2, 1}).str(), "[4,4,2,1]");
  EXPECT_EQ(parse_partition("[4,4,2,1]"), Partition({4, 4, 2, 1}));
  auto t = T("[[1],[],[2,1]]");
  EXPECT_EQ(parse_ntuple(ntuple_str(t)), t);
  EXPECT_THROW(parse_partition("[1,x]"), std::invalid_argument);
}
