#include "mukade/hyperseries.hpp"

#include <sstream>
#include <stdexcept>

#include "hyperseries/formulas.hpp"

namespace mukade {

namespace detail {
template <>
bool vanishes<Scalar>(const Scalar& x) {
  return x.is_zero();
}
}  // namespace detail

using detail::qratio;

std::vector<int> ThetaMatrix::z_exponents() const {
  std::vector<int> z(n > 0 ? n - 1 : 0, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i; k < j; ++k) z[k - 1] += at(i, j);
  return z;
}

int ThetaMatrix::degree() const {
  int d = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d += at(i, j) * (j - i);
  return d;
}

std::vector<ThetaMatrix> theta_matrices(int n, int D, bool exact) {
  std::vector<ThetaMatrix> out;
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) cells.push_back({i, j});
  ThetaMatrix th(n);
  auto rec = [&](auto&& self, size_t c, int left) -> void {
    if (c == cells.size()) {
      if (!exact || left == 0) out.push_back(th);
      return;
    }
    auto [i, j] = cells[c];
    for (int a = 0; a * (j - i) <= left; ++a) {
      th.at(i, j) = a;
      self(self, c + 1, left - a * (j - i));
    }
    th.at(i, j) = 0;
  };
  rec(rec, 0, D);
  return out;
}

int z_degree(const std::vector<int>& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

RatioSeries RatioSeries::constant(int n, int D, const Scalar& a) {
  RatioSeries r(n, D);
  r.add(std::vector<int>(n - 1, 0), a);
  return r;
}

RatioSeries RatioSeries::ratio_power(int n, int D, int i, int j, int k, const Scalar& a) {
  RatioSeries r(n, D);
  std::vector<int> e(n - 1, 0);
  for (int m = i; m < j; ++m) e[m - 1] = k;
  r.add(e, a);
  return r;
}

void RatioSeries::add(const std::vector<int>& e, const Scalar& a) {
  if (a.is_zero() || z_degree(e) > D) return;
  auto it = c.find(e);
  if (it == c.end()) {
    c.emplace(e, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) c.erase(it);
}

Scalar RatioSeries::coeff(const std::vector<int>& e) const {
  auto it = c.find(e);
  return it == c.end() ? Scalar() : it->second;
}

RatioSeries RatioSeries::operator+(const RatioSeries& o) const {
  RatioSeries r(n, std::min(D, o.D));
  for (auto& [e, a] : c) r.add(e, a);
  for (auto& [e, a] : o.c) r.add(e, a);
  return r;
}

RatioSeries RatioSeries::operator-(const RatioSeries& o) const { return *this + o.scaled(Scalar(-1)); }

RatioSeries RatioSeries::operator*(const RatioSeries& o) const {
  if (n != o.n) throw std::invalid_argument("RatioSeries: variable count mismatch");
  RatioSeries r(n, std::min(D, o.D));
  std::map<std::vector<int>, Scalar> acc;
  for (auto& [e, a] : c) {
    int de = z_degree(e);
    for (auto& [f, b] : o.c) {
      if (de + z_degree(f) > r.D) continue;
      std::vector<int> g(e);
      for (size_t k = 0; k < g.size(); ++k) g[k] += f[k];
      acc[g] += a * b;
    }
  }
  for (auto& [e, a] : acc) r.add(e, a);
  return r;
}

RatioSeries RatioSeries::scaled(const Scalar& a) const {
  RatioSeries r(n, D);
  for (auto& [e, b] : c) r.add(e, a * b);
  return r;
}

RatioSeries RatioSeries::truncated(int d) const {
  RatioSeries r(n, std::min(D, d));
  for (auto& [e, a] : c) r.add(e, a);
  return r;
}

bool RatioSeries::operator==(const RatioSeries& o) const {
  int d = std::min(D, o.D);
  auto a = truncated(d), b = o.truncated(d);
  if (a.c.size() != b.c.size()) return false;
  for (auto& [e, x] : a.c)
    if (b.coeff(e) != x) return false;
  return true;
}

std::string RatioSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [e, a] : c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << a.str() << ")";
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k]) os << "*z" << k + 1 << (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
  }
  if (first) os << "0";
  os << " + O(deg " << D + 1 << ")";
  return os.str();
}

RatioSeries rational_factor(int n, int D, int i, int j, const Scalar& a, const Scalar& b) {
  // (1 - a M)/(1 - b M) = 1 + sum_{m>=1} b^{m-1} (b - a) M^m
  RatioSeries r = RatioSeries::constant(n, D, Scalar(1));
  Scalar coef = b - a;
  for (int m = 1; m * (j - i) <= D; ++m) {
    r = r + RatioSeries::ratio_power(n, D, i, j, m, coef);
    coef *= b;
  }
  return r;
}

RatioSeries infinite_ratio_factor(int n, int D, int i, int j, const Scalar& a, const Scalar& b, const Scalar& q) {
  // q-binomial theorem: sum_m (a/b; q)_m/(q; q)_m (b M)^m
  RatioSeries r(n, D);
  Scalar ab = a / b;
  for (int m = 0; m * (j - i) <= D; ++m)
    r = r + RatioSeries::ratio_power(n, D, i, j, m, qratio(ab, q, q, m) * b.pow(m));
  return r;
}

Scalar d_coefficient(const std::vector<int>& theta, const std::vector<Scalar>& s, const Scalar& q, const Scalar& t) {
  for (int a : theta)
    if (a < 0) throw std::invalid_argument("d_coefficient: negative theta");
  if (s.size() < theta.size() + 1) throw std::invalid_argument("d_coefficient: too few parameters");
  return detail::d_formula(theta, s, q, t);
}

Scalar c_coefficient(const ThetaMatrix& theta, const std::vector<Scalar>& s, const Scalar& q, const Scalar& t) {
  if (static_cast<int>(s.size()) < theta.n) throw std::invalid_argument("c_coefficient: too few parameters");
  return detail::c_formula(theta.n, [&](int i, int j) { return theta.at(i, j); }, s, q, t);
}

RatioSeries pn_series(int n, const std::vector<Scalar>& s, int D, const Scalar& q, const Scalar& t) {
  RatioSeries r(n, D);
  for (auto& th : theta_matrices(n, D)) r.add(th.z_exponents(), c_coefficient(th, s, q, t));
  return r;
}

RatioSeries fn_series(int n, const std::vector<Scalar>& s, int D, const Scalar& q, const Scalar& t) {
  // base pair (1/q, t/q): the pair (1/q, 1/t) is not an eigenfunction of the tilde operator
  RatioSeries r = pn_series(n, s, D, q.inverse(), t / q);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      RatioSeries f = RatioSeries::constant(n, D, Scalar(1)) - RatioSeries::ratio_power(n, D, k, l, 1);
      r = r * f;
    }
  return r;
}

RatioSeries shift_x(const RatioSeries& f, int k, const Scalar& q, int sign) {
  // z_{k-1} -> q^sign z_{k-1}, z_k -> q^-sign z_k
  RatioSeries r(f.n, f.D);
  for (auto& [e, a] : f.c) {
    int ex = 0;
    if (k >= 2) ex += e[k - 2];
    if (k <= f.n - 1) ex -= e[k - 1];
    r.add(e, a * q.pow(sign * ex));
  }
  return r;
}

RatioSeries apply_D1(DOperator dir, const std::vector<Scalar>& s, const Scalar& q, const Scalar& t,
                     const RatioSeries& f) {
  int n = f.n, D = f.D;
  RatioSeries out(n, D);
  bool fw = dir == DOperator::forward;
  for (int k = 1; k <= n; ++k) {
    RatioSeries term = shift_x(f, k, q, fw ? 1 : -1).scaled(s[k - 1]);
    for (int l = 1; l < k; ++l)
      term = term * (fw ? rational_factor(n, D, l, k, t, Scalar(1)) : rational_factor(n, D, l, k, t / q, q.inverse()));
    for (int l = k + 1; l <= n; ++l)
      term = term * (fw ? rational_factor(n, D, k, l, t.inverse(), Scalar(1)) : rational_factor(n, D, k, l, q / t, q));
    out = out + term;
  }
  return out;
}

Scalar kn_phi_term(const std::vector<int>& mu, const std::vector<Scalar>& a, const std::vector<Scalar>& x,
                   const std::vector<Scalar>& B, const std::vector<Scalar>& C) {
  Scalar q = Scalar::q();
  size_t m = mu.size();
  Scalar r(1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) r *= (q.pow(mu[i]) * x[i] - q.pow(mu[j]) * x[j]) / (x[i] - x[j]);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) r *= qratio(a[j] * x[i] / x[j], q * x[i] / x[j], q, mu[i]);
    for (size_t k = 0; k < B.size(); ++k) r *= qratio(B[k] * x[i], C[k] * x[i], q, mu[i]);
  }
  return r;
}

namespace {

void compositions(int m, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= d; ++a) {
    cur.push_back(a);
    compositions(m, d - a, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int m, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (m == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  compositions(m, d, cur, out);
  return out;
}

std::vector<Scalar> phi_by_degree(const std::vector<Scalar>& a, const std::vector<Scalar>& x,
                                  const std::vector<Scalar>& B, const std::vector<Scalar>& C, int D) {
  std::vector<Scalar> out;
  for (int d = 0; d <= D; ++d) {
    Scalar sum;
    for (auto& mu : compositions(static_cast<int>(a.size()), d)) sum += kn_phi_term(mu, a, x, B, C);
    out.push_back(sum);
  }
  return out;
}

}  // namespace

std::vector<Scalar> kn_phi(const std::vector<Scalar>& a, const std::vector<Scalar>& x, const std::vector<Scalar>& b,
                           const Scalar& c, const std::vector<Scalar>& y, int D) {
  std::vector<Scalar> B, C;
  for (size_t k = 0; k < b.size(); ++k) {
    B.push_back(b[k] * y[k]);
    C.push_back(c * y[k]);
  }
  return phi_by_degree(a, x, B, C, D);
}

std::vector<Scalar> kn_euler_rhs(const std::vector<Scalar>& a, const std::vector<Scalar>& x,
                                 const std::vector<Scalar>& b, const Scalar& c, const std::vector<Scalar>& y, int D) {
  Scalar q = Scalar::q();
  Scalar A(1);
  for (auto& ai : a) A *= ai;
  for (auto& bk : b) A *= bk;
  A /= c.pow(static_cast<long>(b.size()));
  std::vector<Scalar> a2, B2, C2;
  for (auto& bk : b) a2.push_back(c / bk);
  for (size_t i = 0; i < a.size(); ++i) {
    B2.push_back(c * x[i] / a[i]);
    C2.push_back(c * x[i]);
  }
  std::vector<Scalar> inner = phi_by_degree(a2, y, B2, C2, D);
  std::vector<Scalar> out(D + 1);
  // (A u; q)_inf/(u; q)_inf = sum_k (A; q)_k/(q; q)_k u^k
  for (int k = 0; k <= D; ++k) {
    Scalar pre = qratio(A, q, q, k);
    for (int d = 0; k + d <= D; ++d) out[k + d] += pre * A.pow(d) * inner[d];
  }
  return out;
}

Scalar nmulti(int n, int m, const std::vector<int>& mu, const std::vector<Scalar>& s) {
  if (static_cast<int>(mu.size()) != m || static_cast<int>(s.size()) < n + m)
    throw std::invalid_argument("nmulti: size mismatch");
  return detail::nmulti_formula(n, m, mu, s, Scalar::q(), Scalar::t());
}

std::vector<int> flatten(const NTuple& l, const std::vector<int>& profile) {
  std::vector<int> out;
  for (size_t i = 0; i < profile.size(); ++i) {
    std::vector<int> parts = i < l.size() ? l[i].parts() : std::vector<int>{};
    if (static_cast<int>(parts.size()) > profile[i]) throw std::invalid_argument("profile shorter than a partition");
    for (int k = 0; k < profile[i]; ++k) out.push_back(k < static_cast<int>(parts.size()) ? parts[k] : 0);
  }
  return out;
}

std::vector<Scalar> specialized_s(const NTuple& l, const std::vector<int>& profile, const std::vector<Scalar>& u) {
  std::vector<int> flat = flatten(l, profile);
  std::vector<Scalar> s;
  size_t idx = 0;
  for (size_t i = 0; i < profile.size(); ++i)
    for (int k = 1; k <= profile[i]; ++k) s.push_back(Scalar::qt(flat[idx++], 1 - k) * u[i]);
  return s;
}

Scalar duality_pairing(const NTuple& l, const NTuple& m, const std::vector<int>& profile,
                       const std::vector<Scalar>& u) {
  std::vector<int> fl = flatten(l, profile), fm = flatten(m, profile);
  int n = static_cast<int>(fl.size());
  if (n == 0) return Scalar(1);
  // x^{m-l} times z^E is constant iff E_k = sum_{j<=k} (m_j - l_j)
  std::vector<int> E(n - 1);
  int run = 0, D = 0;
  for (int k = 0; k < n; ++k) {
    run += fm[k] - fl[k];
    if (k < n - 1) {
      if (run < 0) return Scalar();
      E[k] = run;
      D += run;
    }
  }
  if (run != 0) return Scalar();
  Scalar q = Scalar::q(), qt = q / Scalar::t();
  RatioSeries f = fn_series(n, specialized_s(l, profile, u), D, q, qt);
  RatioSeries p = pn_series(n, specialized_s(m, profile, u), D, q, qt);
  return (f * p).coeff(E);
}

}  // namespace mukade
