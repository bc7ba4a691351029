#include <gtest/gtest.h>

#include <iostream>

#include "mukade/nekrasov.hpp"

using namespace mukade;

namespace {

Scalar P(const std::string& s) { return parse_scalar(s); }
std::vector<Partition> upto(int n) {
  std::vector<Partition> r;
  for (int k = 0; k <= n; ++k)
    for (auto& l : partitions(k)) r.push_back(l);
  return r;
}

}  // namespace

TEST(Nekrasov, Examples) {
  Scalar u = Scalar::u(1);
  EXPECT_EQ(nekrasov(Partition(), Partition(), u), Scalar(1));
  EXPECT_EQ(nekrasov(Partition({1}), Partition({1}), u), P("(1-u1*t)*(1-u1/q)"));
  EXPECT_EQ(nekrasov(Partition(), Partition({1}), u), P("1-u1*t/q"));
}

TEST(Nekrasov, Reflection) {
  // N_{lm}(x/gamma) = N_{ml}(1/(gamma x)) x^{|l|+|m|} f_l/f_m
  Scalar x = Scalar::u(1), gi = Scalar::gamma().inverse();
  for (auto& l : upto(3))
    for (auto& m : upto(3)) {
      Scalar lhs = nekrasov(l, m, gi * x);
      Scalar rhs = nekrasov(m, l, gi * x.inverse()) * x.pow(l.size() + m.size()) * flaming_factors(l).f /
                   flaming_factors(m).f;
      EXPECT_EQ(lhs, rhs) << l << " " << m;
    }
}

TEST(Nekrasov, CCprime) {
  for (auto& l : upto(4)) {
    Scalar sign(l.size() % 2 ? -1 : 1);
    EXPECT_EQ(c_lambda(l) * cprime_lambda(l),
              sign * Scalar::qt(l.conjugate().n() + l.size(), l.n()) * nekrasov(l, l, Scalar(1)))
        << l;
  }
}

TEST(Nekrasov, AddBoxRatio) {
  // adding the box (i, l_i + 1) to l changes N_{l,m}(u) only through the new
  // cell's own factor, the row i cells of l and the column l_i+1 cells of m
  Scalar u = Scalar::u(1);
  for (auto& l : upto(3))
    for (auto& m : upto(2)) {
      auto add = add_remove_sets(l).first;
      for (auto [i, j] : add) {
        std::vector<int> parts = l.parts();
        if (i > l.length()) parts.push_back(0);
        ++parts[i - 1];
        Partition l2(parts);
        Scalar ratio = nekrasov(l2, m, u) / nekrasov(l, m, u);
        Scalar expect(1);
        for (int c = 1; c <= j; ++c) {
          auto [a2, lg2] = std::make_pair(l2.arm_leg(i, c).first, m.arm_leg(i, c).second);
          auto [a1, lg1] = std::make_pair(l.arm_leg(i, c).first, m.arm_leg(i, c).second);
          expect *= 1 - u * Scalar::qt(a2, lg2 + 1);
          if (c < j) expect /= 1 - u * Scalar::qt(a1, lg1 + 1);
        }
        for (int r = 1; r <= m.conjugate()[j]; ++r) {
          int a = m.arm_leg(r, j).first;
          expect *= 1 - u * Scalar::qt(-a - 1, -l2.arm_leg(r, j).second);
          expect /= 1 - u * Scalar::qt(-a - 1, -l.arm_leg(r, j).second);
        }
        EXPECT_EQ(ratio, expect) << l << " + (" << i << "," << j << ") vs " << m;
      }
    }
}

TEST(Nekrasov, VanishingTruthTable) {
  // brute force N_{l,m}(q^n t^m) == 0 against the containment criterion
  int checked = 0;
  for (auto& l : upto(3))
    for (auto& m : upto(3))
      for (int n = -2; n <= 2; ++n)
        for (int mm = -2; mm <= 2; ++mm) {
          bool b1 = mm >= 0 && n <= 0, b2 = mm <= -1 && n >= 1;
          if (!b1 && !b2) {
            EXPECT_THROW(nekrasov_vanishes(l, m, n, mm), std::invalid_argument);
            continue;
          }
          bool zero = nekrasov(l, m, Scalar::qt(n, mm)).is_zero();
          EXPECT_EQ(zero, nekrasov_vanishes(l, m, n, mm)) << l << " " << m << " " << n << " " << mm;
          ++checked;
        }
  EXPECT_GT(checked, 0);
}

TEST(Nekrasov, RemarkEmptyLambdaAtT) {
  // N_{0,m}(t) for |m| <= 4: record which m give a nonzero value
  std::vector<Partition> nonzero;
  for (auto& m : upto(4))
    if (!nekrasov(Partition(), m, Scalar::t()).is_zero()) nonzero.push_back(m);
  // the containment criterion (n, m) = (0, 1) says m contains B_{0,1}(0) = 0,
  // i.e. never vanishes
  EXPECT_EQ(nonzero.size(), upto(4).size());
  // with the arguments swapped, N_{m,0}(t) != 0 exactly for one-row m
  for (auto& m : upto(4)) EXPECT_EQ(nekrasov(m, Partition(), Scalar::t()).is_zero(), m.length() > 1) << m;
}

TEST(ConformalBlock, LowOrder) {
  std::vector<Scalar> w{Scalar::w(1)}, v{Scalar::v(1)}, u{Scalar::u(1)};
  auto cb = conformal_block(w, v, u, 1);
  EXPECT_EQ(cb[0], Scalar(1));
  Scalar qt1 = Scalar::q() / Scalar::t();
  Partition one({1}), e;
  EXPECT_EQ(cb[1], nekrasov(e, one, qt1 * w[0] / v[0]) * nekrasov(one, e, qt1 * v[0] / u[0]) /
                       nekrasov(one, one, qt1));
}
