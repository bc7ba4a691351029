#include <gtest/gtest.h>

#include <random>

#include "mukade/scalar.hpp"

using namespace mukade;

namespace {

Scalar P(const std::string& s) { return parse_scalar(s); }

Scalar random_scalar(std::mt19937& g) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2), n(1, 3);
  auto poly = [&]() {
    Scalar r;
    int k = n(g);
    for (int i = 0; i < k; ++i) {
      Scalar m(c(g));
      m *= Scalar::p().pow(e(g)) * Scalar::s().pow(e(g)) * Scalar::u(1).pow(e(g));
      r += m;
    }
    return r;
  };
  Scalar d = poly();
  while (d.is_zero()) d = poly();
  return poly() / d;
}

}  // namespace

TEST(Qpoch, Branches) {
  Scalar a = Scalar::u(1);
  EXPECT_EQ(qpoch(a, 0), Scalar(1));
  EXPECT_EQ(qpoch(a, 2), (1 - a) * (1 - Scalar::q() * a));
  EXPECT_EQ(qpoch(a, -1), (1 - a / Scalar::q()).inverse());
}

TEST(Qpoch, Recurrence) {
  std::mt19937 g(7);
  for (int k = 0; k < 6; ++k) {
    Scalar a = random_scalar(g);
    for (int m = -3; m <= 3; ++m) {
      Scalar lhs, rhs;
      try {
        lhs = qpoch(a, m + 1);
        rhs = qpoch(a, m) * (1 - Scalar::q().pow(m) * a);
      } catch (const std::domain_error&) {
        continue;
      }
      EXPECT_EQ(lhs, rhs) << "m=" << m << " a=" << a.str();
    }
  }
}

TEST(Qpoch, Pole) {
  EXPECT_THROW(qpoch(Scalar::q(), -1), std::domain_error);
}

TEST(ScalarEqual, Examples) {
  EXPECT_TRUE(scalar_equal(P("(1-q^2)/(1-q)"), P("1+q")));
  EXPECT_TRUE(scalar_equal(P("gamma^2"), P("t/q")));
  EXPECT_FALSE(scalar_equal(P("(1-q*t)/(1-t)"), P("1+q")));
}

TEST(ScalarEqual, CommonFactorInvariance) {
  Poly n = (P("1+q*u1")).num(), d = P("u2-s").num(), c = P("p*s+u1+3").num();
  Scalar a(n, d);
  Scalar b(n * c, d * c);
  EXPECT_TRUE(scalar_equal(a, b));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Substitute, Examples) {
  int u1 = Symbols::u(1);
  EXPECT_TRUE(P("u1 - t*u2").substitute({{u1, P("t*u2")}}).is_zero());
  EXPECT_EQ(P("(u1;q)_1").substitute({{u1, Scalar::q()}}), P("1-q"));
  EXPECT_EQ(Scalar::gamma().pow(6), P("t^3/q^3"));
}

TEST(Substitute, VanishingDenominator) {
  int u1 = Symbols::u(1);
  EXPECT_THROW(P("1/(u1-q)").substitute({{u1, Scalar::q()}}), std::domain_error);
}

TEST(Field, Axioms) {
  std::mt19937 g(11);
  for (int k = 0; k < 25; ++k) {
    Scalar a = random_scalar(g), b = random_scalar(g), c = random_scalar(g);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Scalar(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar(1));
  }
}

TEST(Serialize, Canonical) {
  EXPECT_EQ(P("gamma^2").str(), "s^2/p^2");
  EXPECT_EQ(P("q").str(), "p^2");
  EXPECT_EQ(P("0").str(), "0");
  EXPECT_EQ(P("(u1;q)_2").substitute({{Symbols::u(1), Scalar::q()}}), P("(1-q)(1-q^2)"));
}

TEST(Serialize, RoundTrip) {
  std::mt19937 g(3);
  for (int k = 0; k < 30; ++k) {
    Scalar a = random_scalar(g);
    Scalar b = parse_scalar(a.str());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_scalar("p+"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("foo"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
}

TEST(Gcd, Multivariate) {
  Poly a = P("(1-q*u1/u2)").num(), b = P("u1+s*u2-p").num(), c = P("u1*p-s^3*u2+1").num();
  Poly g = gcd(a * b * b, b * c);
  Poly q;
  EXPECT_TRUE(Poly::divide(g, b, &q));
  EXPECT_TRUE(q.is_constant());
  Scalar r(a * b * c * c, b * c * P("p-s").num());
  EXPECT_EQ(r.den().size(), 2u);
  EXPECT_EQ(r, Scalar(a * c, P("p-s").num()));
}

TEST(Derivative, Simple) {
  EXPECT_EQ(P("u1^2/(1-u1)").derivative(Symbols::u(1)), P("(2*u1-u1^2)/(1-u1)^2"));
}
