#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "mukade/poly.hpp"

namespace mukade {

// Element of Q(p, s, u1.., v1.., w, ...) with q = p^2, t = s^2.
// Numerator and denominator carry non-negative exponents; the denominator is
// non-zero with positive leading coefficient.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}
  Scalar(const mpz_class& c) : num_(c), den_(1) {}
  Scalar(const Poly& n);
  Scalar(const Poly& n, const Poly& d);  // reduced on construction

  static Scalar var(int i, int k = 1);
  static Scalar rational(long a, long b);
  static Scalar p() { return var(Symbols::p()); }
  static Scalar s() { return var(Symbols::s()); }
  static Scalar q() { return var(Symbols::p(), 2); }
  static Scalar t() { return var(Symbols::s(), 2); }
  static Scalar gamma() { return Scalar(Poly::var(Symbols::s()), Poly::var(Symbols::p())); }
  // q^a t^b with half-integer exponents given as doubled integers
  static Scalar qt_half(int two_a, int two_b);
  static Scalar qt(int a, int b) { return qt_half(2 * a, 2 * b); }
  static Scalar u(int i) { return var(Symbols::u(i)); }
  static Scalar v(int i) { return var(Symbols::v(i)); }
  static Scalar w() { return var(Symbols::w()); }
  static Scalar w(int i) { return var(Symbols::w(i)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;
  Scalar pow(long k) const;

  // exact equality by cross multiplication (after a modular pre-filter)
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  bool depends_on(int var) const;
  Scalar substitute(const std::map<int, Scalar>& b) const;
  Scalar derivative(int var) const;

  // canonical text; str() reduces first
  std::string str() const;

 private:
  Poly num_, den_;
  void normalize();
};

bool scalar_equal(const Scalar& a, const Scalar& b, bool probabilistic = false);

// (a;q)_m for any integer m
Scalar qpoch(const Scalar& a, long m);
// (a;base)_m with an arbitrary base
Scalar qpoch_base(const Scalar& a, const Scalar& base, long m);

Scalar parse_scalar(const std::string& text);

inline Scalar operator+(long a, const Scalar& b) { return Scalar(a) + b; }
inline Scalar operator-(long a, const Scalar& b) { return Scalar(a) - b; }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace mukade
