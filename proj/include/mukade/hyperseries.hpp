#pragma once

#include <map>
#include <string>
#include <vector>

#include "mukade/partition.hpp"
#include "mukade/scalar.hpp"

namespace mukade {

// Strictly upper triangular theta_{ij} >= 0, 1 <= i < j <= n.
struct ThetaMatrix {
  int n = 1;
  std::vector<int> e;  // row-major over i < j

  explicit ThetaMatrix(int n_ = 1) : n(n_), e(n_ * (n_ - 1) / 2, 0) {}
  int& at(int i, int j) { return e[index(i, j)]; }  // 1-based
  int at(int i, int j) const { return e[index(i, j)]; }
  // exponents of z_k = x_{k+1}/x_k in prod (x_j/x_i)^{theta_ij}
  std::vector<int> z_exponents() const;
  int degree() const;  // total z-degree, sum theta_ij (j - i)

 private:
  int index(int i, int j) const { return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1); }
};

// all theta with total z-degree <= D (or == D when exact)
std::vector<ThetaMatrix> theta_matrices(int n, int D, bool exact = false);

// Truncated element of K[[x_2/x_1, ..., x_n/x_{n-1}]], keyed by z-exponents.
struct RatioSeries {
  int n = 1;
  int D = 0;
  std::map<std::vector<int>, Scalar> c;

  RatioSeries() = default;
  RatioSeries(int n_, int D_) : n(n_), D(D_) {}
  static RatioSeries constant(int n, int D, const Scalar& a);
  // a (x_j/x_i)^k, i < j
  static RatioSeries ratio_power(int n, int D, int i, int j, int k, const Scalar& a = Scalar(1));

  void add(const std::vector<int>& e, const Scalar& a);
  Scalar coeff(const std::vector<int>& e) const;
  RatioSeries operator+(const RatioSeries& o) const;
  RatioSeries operator-(const RatioSeries& o) const;
  RatioSeries operator*(const RatioSeries& o) const;
  RatioSeries scaled(const Scalar& a) const;
  RatioSeries truncated(int D) const;
  bool operator==(const RatioSeries& o) const;
  std::string str() const;
};

int z_degree(const std::vector<int>& e);

// (1 - a x_j/x_i)/(1 - b x_j/x_i) for i < j
RatioSeries rational_factor(int n, int D, int i, int j, const Scalar& a, const Scalar& b);
// (a x_j/x_i; q)_inf / (b x_j/x_i; q)_inf for i < j
RatioSeries infinite_ratio_factor(int n, int D, int i, int j, const Scalar& a, const Scalar& b, const Scalar& q);

// d_n(theta; s | q, t), theta = (theta_{1,n}, ..., theta_{n-1,n})
Scalar d_coefficient(const std::vector<int>& theta, const std::vector<Scalar>& s, const Scalar& q, const Scalar& t);
Scalar c_coefficient(const ThetaMatrix& theta, const std::vector<Scalar>& s, const Scalar& q, const Scalar& t);

RatioSeries pn_series(int n, const std::vector<Scalar>& s, int D, const Scalar& q, const Scalar& t);
// prod_{k<l} (1 - x_l/x_k) p_n(x; s | 1/q, t/q), the eigenfunction of the tilde operator
RatioSeries fn_series(int n, const std::vector<Scalar>& s, int D, const Scalar& q, const Scalar& t);

enum class DOperator { forward, tilde };
// T_{q^{sign}, x_k}
RatioSeries shift_x(const RatioSeries& f, int k, const Scalar& q, int sign);
RatioSeries apply_D1(DOperator dir, const std::vector<Scalar>& s, const Scalar& q, const Scalar& t,
                     const RatioSeries& f);

// Kajihara-Noumi summand phi_mu(a; x | B; C) with the y's already absorbed in B, C
Scalar kn_phi_term(const std::vector<int>& mu, const std::vector<Scalar>& a, const std::vector<Scalar>& x,
                   const std::vector<Scalar>& B, const std::vector<Scalar>& C);
// coefficients of u^0..u^D in phi^{m,n}(a; x | b y; c y; u)
std::vector<Scalar> kn_phi(const std::vector<Scalar>& a, const std::vector<Scalar>& x, const std::vector<Scalar>& b,
                           const Scalar& c, const std::vector<Scalar>& y, int D);
// coefficients of u^0..u^D on the right side of the q-Euler transformation
std::vector<Scalar> kn_euler_rhs(const std::vector<Scalar>& a, const std::vector<Scalar>& x,
                                 const std::vector<Scalar>& b, const Scalar& c, const std::vector<Scalar>& y, int D);

// N^{n,m}_mu(s_1..s_{n+m}); mu may have negative entries
Scalar nmulti(int n, int m, const std::vector<int>& mu, const std::vector<Scalar>& s);

// s_{[i,k]} = q^{l^(i)_k} t^{1-k} u_i over the profile n
std::vector<Scalar> specialized_s(const NTuple& l, const std::vector<int>& profile, const std::vector<Scalar>& u);
// l^(i)_k listed along [i,k]
std::vector<int> flatten(const NTuple& l, const std::vector<int>& profile);

// [x^{-l} x^{m} f(x; s(l) | q, q/t) p(x; s(m) | q, q/t)]_{x,1}
Scalar duality_pairing(const NTuple& l, const NTuple& m, const std::vector<int>& profile,
                       const std::vector<Scalar>& u);

// high-precision numeric checks of the principal specialization and the transformation formula
struct NumericCheck {
  std::string name;
  double deviation = 0;  // relative
  int order = 0;         // series order reached
  bool converged = false;
  bool ok = false;
};
// m = 0 is the principal specialization; y has m entries
NumericCheck transform_check(int n, int m, double q, double t, const std::vector<double>& s, double x,
                             const std::vector<double>& y, unsigned digits = 60, double tol = 1e-20);

}  // namespace mukade
