#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>

#include "hyperseries/formulas.hpp"
#include "mukade/hyperseries.hpp"

namespace mukade {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

namespace detail {
template <>
bool vanishes<Real>(const Real& x) {
  return x == 0;
}
}  // namespace detail

namespace {

constexpr int kMaxOrder = 400;

Real qpoch_inf(const Real& a, const Real& q, const Real& eps) {
  Real r(1), x = a;
  while (abs(x) > eps) {
    r *= 1 - x;
    x *= q;
  }
  return r;
}

struct SeriesValue {
  Real value;
  int order = 0;
  bool converged = false;
};

// sum_theta c_n(theta; s|q,t) prod z_k^{e_k}, summed degree by degree until the tail is negligible
SeriesValue sum_pn(int n, const std::vector<Real>& s, const std::vector<Real>& z, const Real& q, const Real& t,
                   const Real& eps) {
  SeriesValue out;
  out.value = 1;
  if (n <= 1) {
    out.converged = true;
    return out;
  }
  int quiet = 0;
  for (int K = 1; K <= kMaxOrder; ++K) {
    Real layer = 0;
    for (auto& th : theta_matrices(n, K, true)) {
      Real mono = 1;
      auto e = th.z_exponents();
      for (size_t k = 0; k < e.size(); ++k) mono *= detail::ipow(z[k], e[k]);
      layer += detail::c_formula(n, [&](int i, int j) { return th.at(i, j); }, s, q, t) * mono;
    }
    out.value += layer;
    out.order = K;
    quiet = abs(layer) < eps * abs(out.value) ? quiet + 1 : 0;
    if (quiet >= 3) {
      out.converged = true;
      break;
    }
  }
  return out;
}

std::vector<std::vector<int>> vectors_of_sum(int m, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (m == 0) {
    if (d == 0) out.push_back({});
  } else {
    rec(rec, 0, d);
  }
  return out;
}

}  // namespace

NumericCheck transform_check(int n, int m, double qd, double td, const std::vector<double>& sd, double xd,
                             const std::vector<double>& yd, unsigned digits, double tol) {
  if (static_cast<int>(sd.size()) != n + m || static_cast<int>(yd.size()) != m)
    throw std::invalid_argument("transform_check: size mismatch");
  Real::default_precision(digits);
  NumericCheck out;
  out.name = "transform n=" + std::to_string(n) + " m=" + std::to_string(m);
  Real q(qd), t(td), x(xd);
  std::vector<Real> s(sd.begin(), sd.end()), y(yd.begin(), yd.end());
  Real eps = Real(tol) * Real(1e-8);

  // left side: x_i = x t^{n-i}, x_{n+k} = y_k
  std::vector<Real> X;
  for (int i = 1; i <= n; ++i) X.push_back(x * detail::ipow(t, n - i));
  for (auto& yk : y) X.push_back(yk);
  std::vector<Real> z;
  for (size_t k = 0; k + 1 < X.size(); ++k) z.push_back(X[k + 1] / X[k]);
  SeriesValue lhs_series = sum_pn(n + m, s, z, q, t, eps);
  Real lhs = lhs_series.value;
  for (auto& yk : y) lhs *= qpoch_inf(q * yk / (detail::ipow(t, n) * x), q, eps) / qpoch_inf(t * yk / x, q, eps);

  // right side
  Real pre = 1;
  for (int i = 1; i <= n; ++i) pre *= qpoch_inf(q / t, q, eps) / qpoch_inf(q / detail::ipow(t, i), q, eps);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      pre *= qpoch_inf(q * s[j - 1] / (t * s[i - 1]), q, eps) / qpoch_inf(q * s[j - 1] / s[i - 1], q, eps);
  std::vector<Real> zy;
  for (int k = 0; k + 1 < m; ++k) zy.push_back(y[k + 1] / y[k]);
  Real sum = 0;
  bool conv = lhs_series.converged;
  int order = lhs_series.order;
  int quiet = 0;
  bool sum_conv = m == 0;
  for (int d = 0; d <= (m == 0 ? 0 : kMaxOrder); ++d) {
    Real layer = 0;
    for (auto& mu : vectors_of_sum(m, d)) {
      Real term = detail::nmulti_formula(n, m, mu, s, q, t);
      std::vector<Real> sm;
      for (int k = 0; k < m; ++k) {
        sm.push_back(detail::ipow(q, mu[k]) * s[n + k]);
        term *= detail::ipow(t * y[k] / x, mu[k]);
      }
      SeriesValue inner = sum_pn(m, sm, zy, q, t, eps);
      conv = conv && inner.converged;
      layer += term * inner.value;
    }
    sum += layer;
    order = std::max(order, d);
    quiet = d > 0 && abs(layer) < eps * abs(sum) ? quiet + 1 : 0;
    if (quiet >= 3) {
      sum_conv = true;
      break;
    }
  }
  Real rhs = pre * sum;
  out.converged = conv && sum_conv;
  out.order = order;
  out.deviation = static_cast<double>(abs(lhs - rhs) / abs(rhs));
  out.ok = out.converged && out.deviation < tol;
  return out;
}

}  // namespace mukade
