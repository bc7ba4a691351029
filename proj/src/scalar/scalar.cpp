#include "mukade/scalar.hpp"

#include <random>
#include <stdexcept>

#include "modp.hpp"

namespace mukade {

namespace {

Poly mono_poly(const Mono& m) { return Poly(mpz_class(1), m); }

// split a Laurent monomial into positive and negative parts
void split_mono(const Mono& m, Mono* pos, Mono* neg) {
  *pos = Mono{};
  *neg = Mono{};
  for (int i = 0; i < kMaxVars; ++i) {
    if (m[i] > 0) (*pos)[i] = m[i];
    if (m[i] < 0) (*neg)[i] = static_cast<int16_t>(-m[i]);
  }
}

struct Probe {
  detail::Fp F;
  std::vector<uint64_t> point;
  Probe() : F((uint64_t(1) << 61) - 1) {
    std::mt19937_64 g(0xa11ce5eedULL);
    for (int i = 0; i < kMaxVars; ++i) point.push_back(g() % F.p);
  }
  uint64_t eval(const Poly& P) const {
    uint64_t r = 0;
    for (auto& t : P.terms()) {
      uint64_t c = F.from(t.c);
      for (int i = 0; i < kMaxVars; ++i)
        if (t.m[i]) c = F.mul(c, F.pow(point[i], t.m[i]));
      r = F.add(r, c);
    }
    return r;
  }
};

const Probe& probe() {
  static const Probe pr;
  return pr;
}

}  // namespace

Scalar::Scalar(const Poly& n) : num_(n), den_(1) {
  Mono mn = num_.min_mono();
  bool neg = false;
  for (int i = 0; i < kMaxVars; ++i) neg |= mn[i] < 0;
  if (neg) {
    Mono pos, ng;
    split_mono(mn, &pos, &ng);
    num_ = num_.mul_term(1, ng);
    den_ = mono_poly(ng);
  }
}

Scalar::Scalar(const Poly& n, const Poly& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  // clear negative exponents on either side
  Mono shift = Mono::min(num_.min_mono(), den_.min_mono());
  Mono pos, neg;
  split_mono(shift, &pos, &neg);
  if (!neg.is_one()) {
    num_ = num_.mul_term(1, neg);
    den_ = den_.mul_term(1, neg);
  }
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_one()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      Poly::divide(num_, g, &num_);
      Poly::divide(den_, g, &den_);
    }
  }
  if (den_.lead().c < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::var(int i, int k) {
  if (k >= 0) return Scalar(Poly::var(i, k));
  Scalar r;
  r.num_ = Poly(1);
  r.den_ = Poly::var(i, -k);
  return r;
}

Scalar Scalar::rational(long a, long b) { return Scalar(Poly(a), Poly(b)); }

Scalar Scalar::qt_half(int two_a, int two_b) {
  Mono m;
  m[Symbols::p()] = static_cast<int16_t>(two_a);
  m[Symbols::s()] = static_cast<int16_t>(two_b);
  Mono pos, neg;
  split_mono(m, &pos, &neg);
  Scalar r;
  r.num_ = mono_poly(pos);
  r.den_ = mono_poly(neg);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Scalar r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.normalize();
    return r;
  }
  if (den_.is_one()) {
    r.num_ = num_ * o.den_ + o.num_;
    r.den_ = o.den_;
    return r;
  }
  if (o.den_.is_one()) {
    r.num_ = num_ + o.num_ * den_;
    r.den_ = den_;
    return r;
  }
  Poly g = gcd(den_, o.den_);
  Poly b1, d1;
  Poly::divide(den_, g, &b1);
  Poly::divide(o.den_, g, &d1);
  r.num_ = num_ * d1 + o.num_ * b1;
  r.den_ = den_ * d1;
  if (r.num_.is_zero()) return Scalar();
  if (!g.is_one()) {
    Poly h = gcd(r.num_, g);
    if (!h.is_one()) {
      Poly::divide(r.num_, h, &r.num_);
      Poly::divide(r.den_, h, &r.den_);
    }
  }
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  Scalar r;
  if (den_.is_one() && o.den_.is_one()) {
    r.num_ = num_ * o.num_;
    return r;
  }
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    Poly g1 = gcd(a, d);
    if (!g1.is_one()) {
      Poly::divide(a, g1, &a);
      Poly::divide(d, g1, &d);
    }
  }
  if (!b.is_one()) {
    Poly g2 = gcd(c, b);
    if (!g2.is_one()) {
      Poly::divide(c, g2, &c);
      Poly::divide(b, g2, &b);
    }
  }
  r.num_ = a * c;
  r.den_ = b * d;
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r;
  r.num_ = num_.pow(static_cast<unsigned>(k));
  r.den_ = den_.pow(static_cast<unsigned>(k));
  if (r.den_.lead().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

bool scalar_equal(const Scalar& a, const Scalar& b, bool probabilistic) {
  const Probe& pr = probe();
  const auto& F = pr.F;
  uint64_t an = pr.eval(a.num()), ad = pr.eval(a.den());
  uint64_t bn = pr.eval(b.num()), bd = pr.eval(b.den());
  if (ad && bd && F.mul(an, bd) != F.mul(bn, ad)) return false;
  if (a.num() == b.num() && a.den() == b.den()) return true;
  if (probabilistic && ad && bd) return true;
  return a.num() * b.den() == b.num() * a.den();
}

bool Scalar::operator==(const Scalar& o) const { return scalar_equal(*this, o); }

bool Scalar::depends_on(int var) const {
  return ((num_.var_mask() | den_.var_mask()) >> var) & 1;
}

namespace {

// evaluate P at the bindings as num/den with a common denominator
void eval_poly(const Poly& P, const std::map<int, Scalar>& b, Poly* outn, Poly* outd) {
  std::vector<int> maxe(kMaxVars, 0);
  for (auto& t : P.terms())
    for (auto& kv : b) maxe[kv.first] = std::max<int>(maxe[kv.first], t.m[kv.first]);
  std::map<std::pair<int, int>, Poly> npow, dpow;
  auto np = [&](int v, int k) -> const Poly& {
    auto key = std::make_pair(v, k);
    auto it = npow.find(key);
    if (it != npow.end()) return it->second;
    return npow[key] = b.at(v).num().pow(k);
  };
  auto dp = [&](int v, int k) -> const Poly& {
    auto key = std::make_pair(v, k);
    auto it = dpow.find(key);
    if (it != dpow.end()) return it->second;
    return dpow[key] = b.at(v).den().pow(k);
  };
  std::vector<Term> acc;
  for (auto& t : P.terms()) {
    Mono rest = t.m;
    Poly term(t.c);
    for (auto& kv : b) {
      int v = kv.first;
      int e = t.m[v];
      rest[v] = 0;
      if (e) term = term * np(v, e);
      if (maxe[v] - e) term = term * dp(v, maxe[v] - e);
    }
    Poly shifted = term.mul_term(1, rest);
    for (auto& x : shifted.terms()) acc.push_back(x);
  }
  Poly sum = Poly::from_terms(std::move(acc));
  Poly den(1);
  for (auto& kv : b)
    if (maxe[kv.first]) den = den * dp(kv.first, maxe[kv.first]);
  *outn = sum;
  *outd = den;
}

}  // namespace

Scalar Scalar::substitute(const std::map<int, Scalar>& b) const {
  std::map<int, Scalar> used;
  uint64_t mask = num_.var_mask() | den_.var_mask();
  for (auto& kv : b)
    if ((mask >> kv.first) & 1) used.insert(kv);
  if (used.empty()) return *this;
  Poly nn, nd, dn, dd;
  eval_poly(num_, used, &nn, &nd);
  eval_poly(den_, used, &dn, &dd);
  if (dn.is_zero()) throw std::domain_error("denominator vanishes under substitution");
  return Scalar(nn * dd, nd * dn);
}

Scalar Scalar::derivative(int var) const {
  auto d = [var](const Poly& P) {
    std::vector<Term> ts;
    for (auto& t : P.terms()) {
      if (!t.m[var]) continue;
      Mono m = t.m;
      m[var] -= 1;
      ts.push_back({m, t.c * t.m[var]});
    }
    return Poly::from_terms(std::move(ts));
  };
  return Scalar(d(num_) * den_ - num_ * d(den_), den_ * den_);
}

std::string Scalar::str() const {
  std::string n = num_.str();
  if (den_.is_one()) return n;
  std::string d = den_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1 || d.find_first_of("*") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar qpoch(const Scalar& a, long m) { return qpoch_base(a, Scalar::q(), m); }

Scalar qpoch_base(const Scalar& a, const Scalar& base, long m) {
  if (m == 0) return Scalar(1);
  Scalar r(1);
  if (m > 0) {
    Scalar x = a;
    for (long n = 0; n < m; ++n) {
      r *= Scalar(1) - x;
      x *= base;
    }
    return r;
  }
  Scalar bi = base.inverse();
  Scalar x = a * bi;
  for (long n = 1; n <= -m; ++n) {
    Scalar f = Scalar(1) - x;
    if (f.is_zero()) throw std::domain_error("pole in q-Pochhammer");
    r *= f;
    x *= bi;
  }
  return r.inverse();
}

}  // namespace mukade
