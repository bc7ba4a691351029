#include <gtest/gtest.h>

#include "mukade/genmac.hpp"
#include "mukade/screened.hpp"

using namespace mukade;

namespace {

Scalar P(const std::string& s) { return parse_scalar(s); }
NTuple T(const std::string& s) { return parse_ntuple(s); }

std::vector<Scalar> us(int N) {
  std::vector<Scalar> u;
  for (int i = 1; i <= N; ++i) u.push_back(Scalar::u(i));
  return u;
}

const GenMac& gm(int N) {
  static GenMac g1(1, us(1)), g2(2, us(2));
  return N == 1 ? g1 : g2;
}

}  // namespace

TEST(ScreenedVertex, VacuumElement) {
  for (int N = 1; N <= 2; ++N)
    for (int k = 0; k < N; ++k)
      EXPECT_EQ(screened_matrix_element(FockVector::vacuum(Side::bra, N), k, us(N)), Scalar(1)) << N << " " << k;
}

TEST(ScreenedVertex, CreationCoefficient) {
  // <0|a^(1)_1 Phi^(0)(x)|0> = A_1 <a_1|a_-1> with A_1 = (1-t)/(1-q)
  NTuple l = T("[[1],[]]");
  Scalar e = screened_matrix_element(FockVector::basis(Side::bra, l), 0, us(2));
  EXPECT_EQ(e / basis_norm(l), P("(1-t)/(1-q)"));
  EXPECT_EQ(screened_matrix_element(FockVector::basis(Side::bra, T("[[],[1]]")), 0, us(2)), Scalar(0));
}

TEST(ScreenedVertex, Weight) {
  auto u = us(2);
  EXPECT_EQ(screened_weight({0}, u), Scalar(1));
  EXPECT_EQ(screened_weight({1}, u), P("(1-t*u1/u2)/(1-q*u1/u2)"));
}

TEST(RCoefficient, Examples) {
  EXPECT_EQ(R_coefficient(T("[[]]"), {2}, us(1)), Scalar(1));
  EXPECT_EQ(R_coefficient(T("[[2,1]]"), {2}, us(1)), Scalar(1));
  Scalar x = Scalar::u(1) / Scalar::u(2);
  EXPECT_EQ(R_coefficient(T("[[],[1]]"), {1, 1}, us(2)),
            Scalar::gamma() * qpoch(x, -1) / qpoch(Scalar::q() / Scalar::t() * x, -1));
}

TEST(GenmacViaScreened, EmptyIsVacuum) {
  EXPECT_EQ(genmac_via_screened(T("[[]]"), {1}, us(1)), FockVector::vacuum(Side::ket, 1));
  EXPECT_EQ(genmac_via_screened(T("[[],[]]"), {1, 1}, us(2)), FockVector::vacuum(Side::ket, 2));
}

TEST(GenmacViaScreened, MatchesQStates) {
  for (int N = 1; N <= 2; ++N) {
    std::vector<std::vector<int>> profs =
        N == 1 ? std::vector<std::vector<int>>{{1}, {2}} : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}};
    for (auto& prof : profs)
      for (int L = 0; L <= 2; ++L)
        for (auto& l : ntuples(N, L)) {
          bool fits = true;
          for (int i = 0; i < N; ++i) fits = fits && l[i].length() <= prof[i];
          if (!fits) continue;
          FockVector got = genmac_via_screened(l, prof, us(N));
          EXPECT_EQ(got, gm(N).Q_state(l).scaled(R_coefficient(l, prof, us(N)))) << ntuple_str(l);
        }
  }
}

TEST(GenmacViaScreened, RatioIsNotTrivial) {
  // R differs from 1, so the comparison above tests the coefficient as well
  NTuple l = T("[[],[1]]");
  FockVector got = genmac_via_screened(l, {1, 1}, us(2));
  EXPECT_NE(got, gm(2).Q_state(l));
}

TEST(ScreenedPSeries, IsEigenfunction) {
  // x^{-l} <P_l|V|0> solves the D^1 eigenvalue equation with the specialized s
  Scalar q = Scalar::q(), qt = q / Scalar::t();
  auto u = us(2);
  for (auto prof : std::vector<std::vector<int>>{{1, 1}, {2, 0}})
    for (int L = 0; L <= 2; ++L)
      for (auto& l : ntuples(2, L)) {
        bool fits = true;
        for (int i = 0; i < 2; ++i) fits = fits && l[i].length() <= prof[i];
        if (!fits) continue;
        auto s = specialized_s(l, prof, u);
        Scalar e1;
        for (auto& x : s) e1 += x;
        RatioSeries f = screened_P_series(l, prof, u, 2);
        EXPECT_EQ(apply_D1(DOperator::forward, s, q, qt, f), f.scaled(e1)) << ntuple_str(l);
        EXPECT_EQ(f, pn_series(2, s, 2, q, qt).scaled(R_coefficient(l, prof, u))) << ntuple_str(l);
      }
}

TEST(SingularVector, Annihilated) {
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    FockVector chi = singular_vector(2, 1, r, s);
    EXPECT_FALSE(chi.is_zero());
    FockSpace F(2, resonant_params(2, 1, r, s));
    for (int i = 1; i <= 2; ++i)
      for (int m = 1; m <= r * s + 1; ++m) EXPECT_TRUE(apply_mode(F.X(i), m, chi).is_zero()) << i << " " << m;
  }
}

TEST(SingularVector, GenericParametersDoNotAnnihilate) {
  FockVector chi = singular_vector(2, 1, 1, 1);
  FockSpace F(2, us(2));
  EXPECT_FALSE(apply_mode(F.X(1), 1, chi).is_zero());
}
