#pragma once

// Product formulas shared by the exact and the numeric evaluations.

#include <stdexcept>
#include <vector>

namespace mukade::detail {

template <class F>
F ipow(const F& x, long k) {
  F r(1), b = k < 0 ? F(1) / x : x;
  for (unsigned long e = k < 0 ? -k : k; e; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

template <class F>
bool vanishes(const F& x);

// (a; base)_m / (b; base)_m for any integer m, with no spurious poles when m < 0
template <class F>
F qratio(const F& a, const F& b, const F& base, long m) {
  F r(1);
  if (m >= 0) {
    F x = a, y = b;
    for (long k = 0; k < m; ++k) {
      r *= (F(1) - x) / (F(1) - y);
      x *= base;
      y *= base;
    }
    return r;
  }
  F bi = F(1) / base;
  F x = a * bi, y = b * bi;
  for (long k = 1; k <= -m; ++k) {
    F den = F(1) - x;
    if (vanishes(den)) throw std::domain_error("pole in q-Pochhammer ratio");
    r *= (F(1) - y) / den;
    x *= bi;
    y *= bi;
  }
  return r;
}

// theta = (theta_{i,n})_{i<n}, s has at least n entries
template <class F>
F d_formula(const std::vector<int>& th, const std::vector<F>& s, const F& q, const F& t) {
  size_t n = th.size() + 1;
  F r(1);
  const F& sn = s[n - 1];
  for (size_t i = 0; i + 1 < n; ++i) {
    int a = th[i];
    if (a == 0) continue;
    r *= ipow(q / t, a) * qratio(t, q, q, a) * qratio(t * sn / s[i], q * sn / s[i], q, a);
    for (size_t j = i + 1; j + 1 < n; ++j) {
      F qj = ipow(q, -th[j]);
      r *= qratio(t * s[j] / s[i], q * s[j] / s[i], q, a) * qratio(qj * q * s[j] / (t * s[i]), qj * s[j] / s[i], q, a);
    }
  }
  return r;
}

// theta(i, j) 1-based accessor over an n x n strictly upper triangular array
template <class F, class Theta>
F c_formula(int n, const Theta& theta, std::vector<F> s, const F& q, const F& t) {
  F r(1);
  for (int k = n; k >= 2; --k) {
    std::vector<int> col(k - 1);
    for (int i = 1; i < k; ++i) col[i - 1] = theta(i, k);
    r *= d_formula(col, s, q, t);
    for (int i = 1; i < k; ++i)
      if (col[i - 1]) s[i - 1] *= ipow(q, -col[i - 1]);
  }
  return r;
}

template <class F>
F nmulti_formula(int n, int m, const std::vector<int>& mu, const std::vector<F>& s, const F& q, const F& t) {
  F r(1);
  for (int k = 1; k <= m; ++k) {
    int a = mu[k - 1];
    if (a == 0) continue;
    const F& snk = s[n + k - 1];
    for (int i = 1; i <= n + k; ++i) r *= qratio(q * snk / (t * s[i - 1]), q * snk / s[i - 1], q, a);
  }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      if (mu[j - 1] == 0) continue;
      F qi = ipow(q, -mu[i - 1]);
      F ratio = s[n + j - 1] / s[n + i - 1];
      r *= qratio(t * qi * ratio, qi * ratio, q, mu[j - 1]);
    }
  return r;
}

}  // namespace mukade::detail
