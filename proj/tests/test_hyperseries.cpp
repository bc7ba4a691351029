#include <gtest/gtest.h>

#include "mukade/hyperseries.hpp"

using namespace mukade;

namespace {

Scalar P(const std::string& s) { return parse_scalar(s); }
Scalar S(int i) { return Scalar::var(Symbols::sp(i)); }
Scalar named(const std::string& n) { return Scalar::var(Symbols::require(n)); }

std::vector<Scalar> sps(int n) {
  std::vector<Scalar> s;
  for (int i = 1; i <= n; ++i) s.push_back(S(i));
  return s;
}

std::vector<Scalar> us(int N) {
  std::vector<Scalar> u;
  for (int i = 1; i <= N; ++i) u.push_back(Scalar::u(i));
  return u;
}

NTuple T(const std::string& s) { return parse_ntuple(s); }

Scalar sum(const std::vector<Scalar>& s) {
  Scalar r;
  for (auto& x : s) r += x;
  return r;
}

}  // namespace

TEST(Theta, Enumeration) {
  EXPECT_EQ(theta_matrices(2, 3).size(), 4u);
  // n=3 degree 1: only theta_12 or theta_23
  EXPECT_EQ(theta_matrices(3, 1, true).size(), 2u);
  ThetaMatrix th(3);
  th.at(1, 3) = 1;
  EXPECT_EQ(th.degree(), 2);
  EXPECT_EQ(th.z_exponents(), (std::vector<int>{1, 1}));
}

TEST(DCoefficient, Examples) {
  Scalar q = Scalar::q(), t = Scalar::t();
  auto s = sps(2);
  EXPECT_EQ(d_coefficient({0}, s, q, t), Scalar(1));
  EXPECT_EQ(d_coefficient({1}, s, q, t), P("(q/t)*(1-t)/(1-q)*(1-t*s2/s1)/(1-q*s2/s1)"));
  // t = q collapses every d to 1
  EXPECT_EQ(d_coefficient({2}, s, q, q), Scalar(1));
  // n=3 with theta_23 = 0 is the n=2 shape in (s1,s3) times the cross factor in s2/s1
  auto s3 = sps(3);
  Scalar d3 = d_coefficient({1, 0}, s3, q, t);
  Scalar cross = P("(1-t*s2/s1)*(1-q*s2/(t*s1))/((1-q*s2/s1)*(1-s2/s1))");
  EXPECT_EQ(d3, d_coefficient({1}, {S(1), S(3)}, q, t) * cross);
}

TEST(PnSeries, LowOrder) {
  Scalar q = Scalar::q(), t = Scalar::t();
  auto p1 = pn_series(1, sps(1), 3, q, t);
  EXPECT_EQ(p1, RatioSeries::constant(1, 3, Scalar(1)));
  auto s = sps(2);
  auto p = pn_series(2, s, 1, q, t);
  RatioSeries expect = RatioSeries::constant(2, 1, Scalar(1)) +
                       RatioSeries::ratio_power(2, 1, 1, 2, 1, d_coefficient({1}, s, q, t));
  EXPECT_EQ(p, expect);
  // t = q: p_2 = 1/(1 - x2/x1)
  auto pq = pn_series(2, s, 3, q, q);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(pq.coeff({k}), Scalar(1));
}

TEST(PnSeries, EigenfunctionN1) {
  Scalar q = Scalar::q(), t = Scalar::t();
  auto p = pn_series(1, sps(1), 2, q, t);
  EXPECT_EQ(apply_D1(DOperator::forward, sps(1), q, t, p), p.scaled(S(1)));
}

TEST(PnSeries, EigenfunctionIdentity) {
  Scalar q = Scalar::q(), t = Scalar::t();
  for (int n = 2; n <= 3; ++n) {
    auto s = sps(n);
    auto p = pn_series(n, s, 3, q, t);
    EXPECT_EQ(apply_D1(DOperator::forward, s, q, t, p), p.scaled(sum(s))) << "n=" << n;
    auto f = fn_series(n, s, 3, q, t);
    EXPECT_EQ(apply_D1(DOperator::tilde, s, q, t, f), f.scaled(sum(s))) << "n=" << n;
  }
}

TEST(PnSeries, DetectsWrongEigenvalue) {
  Scalar q = Scalar::q(), t = Scalar::t();
  auto s = sps(2);
  auto p = pn_series(2, s, 2, q, t);
  EXPECT_NE(apply_D1(DOperator::forward, s, q, t, p), p.scaled(sum(s) * q));
}

TEST(FnSeries, LiteralBasePairFailsTildeIdentity) {
  // prod(1 - x_l/x_k) p_n(x; s | 1/q, 1/t) is not a tilde eigenfunction
  Scalar q = Scalar::q(), t = Scalar::t();
  auto s = sps(2);
  int D = 1;
  RatioSeries delta = RatioSeries::constant(2, D, Scalar(1)) - RatioSeries::ratio_power(2, D, 1, 2, 1);
  RatioSeries f = delta * pn_series(2, s, D, q.inverse(), t.inverse());
  EXPECT_NE(apply_D1(DOperator::tilde, s, q, t, f), f.scaled(sum(s)));
}

TEST(Symmetry, TToQOverT) {
  Scalar q = Scalar::q(), t = Scalar::t();
  for (int n = 2; n <= 3; ++n) {
    auto s = sps(n);
    auto rhs = pn_series(n, s, 3, q, q / t);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) rhs = rhs * infinite_ratio_factor(n, 3, i, j, t, q / t, q);
    EXPECT_EQ(pn_series(n, s, 3, q, t), rhs) << "n=" << n;
  }
}

TEST(KajiharaNoumi, Examples) {
  std::vector<Scalar> a{named("a1")}, x{named("x1")}, b{named("b1")}, y{named("y1")};
  Scalar c = named("c");
  auto phi = kn_phi(a, x, b, c, y, 1);
  EXPECT_EQ(phi[0], Scalar(1));
  EXPECT_EQ(phi[1], P("(1-a1)/(1-q)*(1-b1*y1*x1)/(1-c*y1*x1)"));
}

TEST(KajiharaNoumi, EulerTransformation) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      if (m == 2 && n == 2) continue;  // covered by the acceptance run
      std::vector<Scalar> a, x, b, y;
      for (int i = 1; i <= m; ++i) {
        a.push_back(named("a" + std::to_string(i)));
        x.push_back(named("x" + std::to_string(i)));
      }
      for (int k = 1; k <= n; ++k) {
        b.push_back(named("b" + std::to_string(k)));
        y.push_back(named("y" + std::to_string(k)));
      }
      auto lhs = kn_phi(a, x, b, named("c"), y, 3);
      auto rhs = kn_euler_rhs(a, x, b, named("c"), y, 3);
      for (int d = 0; d <= 3; ++d) EXPECT_EQ(lhs[d], rhs[d]) << "m=" << m << " n=" << n << " degree " << d;
    }
}

TEST(NMulti, Examples) {
  auto s = sps(3);
  EXPECT_EQ(nmulti(2, 1, {0}, s), Scalar(1));
  Scalar expect(1);
  for (int i = 1; i <= 3; ++i) expect *= P("(1-q*s3/(t*s" + std::to_string(i) + "))/(1-q*s3/s" + std::to_string(i) + ")");
  EXPECT_EQ(nmulti(2, 1, {1}, s), expect);
  // (q;q)_{-1} in the denominator forces zero
  EXPECT_EQ(nmulti(2, 1, {-1}, s), Scalar(0));
}

TEST(Duality, Examples) {
  auto u = us(1);
  EXPECT_EQ(duality_pairing(T("[[]]"), T("[[]]"), {2}, u), Scalar(1));
  EXPECT_EQ(duality_pairing(T("[[1]]"), T("[[1]]"), {2}, u), Scalar(1));
  EXPECT_EQ(duality_pairing(T("[[1]]"), T("[[2]]"), {2}, u), Scalar(0));
  EXPECT_EQ(specialized_s(T("[[2,1]]"), {2}, u), (std::vector<Scalar>{P("q^2*u1"), P("q/t*u1")}));
  EXPECT_EQ(flatten(T("[[1],[2]]"), {2, 1}), (std::vector<int>{1, 0, 2}));
}

TEST(Duality, DeltaN2Levels) {
  auto u = us(2);
  for (auto prof : std::vector<std::vector<int>>{{1, 1}, {2, 0}})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (auto& l : ntuples(2, a))
          for (auto& m : ntuples(2, b)) {
            bool fits = true;
            for (int i = 0; i < 2; ++i)
              fits = fits && l[i].length() <= prof[i] && m[i].length() <= prof[i];
            if (!fits) continue;
            EXPECT_EQ(duality_pairing(l, m, prof, u), Scalar(l == m ? 1 : 0)) << ntuple_str(l) << ntuple_str(m);
          }
}

TEST(Numeric, PrincipalSpecialization) {
  auto r = transform_check(2, 0, 0.2, 3.0, {0.7, 1.9}, 1.0, {}, 60, 1e-25);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.deviation, 1e-25);
  EXPECT_TRUE(r.ok);
}

TEST(Numeric, Transformation) {
  auto r = transform_check(1, 1, 0.2, 3.0, {0.7, 1.9}, 1.0, {0.05});
  EXPECT_TRUE(r.ok) << r.deviation;
}

TEST(Numeric, SizeMismatchThrows) {
  EXPECT_THROW(transform_check(2, 1, 0.2, 3.0, {0.7, 1.9}, 1.0, {0.05}), std::invalid_argument);
}
