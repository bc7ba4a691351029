#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mukade {

constexpr int kMaxVars = 40;

// Fixed symbol table. Index order is the lexicographic variable order.
class Symbols {
 public:
  static int index(const std::string& name);  // -1 if unknown
  static int require(const std::string& name);
  static const std::string& name(int i);
  static int count();

  static int p();
  static int s();
  static int u(int i);   // 1-based
  static int v(int i);
  static int w();
  static int w(int i);
  static int z(int i);
  static int sp(int i);  // hyperseries spectral symbols s1..s6
};

struct Mono {
  std::array<int16_t, kMaxVars> e{};

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  int16_t operator[](int i) const { return e[i]; }
  int16_t& operator[](int i) { return e[i]; }

  Mono operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Mono operator/(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  bool divisible_by(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] < o.e[i]) return false;
    return true;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  static Mono var(int i, int k = 1) {
    Mono m;
    m.e[i] = static_cast<int16_t>(k);
    return m;
  }
  static Mono min(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
};

// lexicographic comparison: >0 if a > b
inline int lex_cmp(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

struct MonoHash {
  size_t operator()(const Mono& m) const noexcept {
    const uint64_t* w = reinterpret_cast<const uint64_t*>(m.e.data());
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (size_t i = 0; i < sizeof(m.e) / 8; ++i) {
      h ^= w[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Term {
  Mono m;
  mpz_class c;
};

// Sparse polynomial over Z, terms sorted by decreasing lex order.
// Exponents may be negative (Laurent) but the Scalar layer keeps them >= 0.
class Poly {
 public:
  Poly() = default;
  Poly(long c);
  explicit Poly(const mpz_class& c);
  Poly(const mpz_class& c, const Mono& m);
  static Poly var(int i, int k = 1);
  static Poly from_terms(std::vector<Term> t);  // sorts and combines

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_one() const;
  bool is_monomial() const { return t_.size() == 1; }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }
  mpz_class constant_value() const;  // requires is_constant

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly mul_term(const mpz_class& c, const Mono& m) const;
  Poly pow(unsigned k) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // exact division; false if B does not divide
  static bool divide(const Poly& A, const Poly& B, Poly* Q);
  Poly divexact_int(const mpz_class& c) const;

  mpz_class content() const;      // positive gcd of coefficients
  Mono min_mono() const;          // componentwise minimum exponent
  int degree(int var) const;
  uint64_t var_mask() const;      // bit i set if variable i occurs (i < 64)
  int max_abs_exponent() const;

  std::string str() const;

 private:
  std::vector<Term> t_;
  friend class PolyBuilder;
};

Poly gcd(const Poly& A, const Poly& B);

}  // namespace mukade
