#include "mukade/linalg.hpp"

#include <stdexcept>

namespace mukade {

Matrix identity(size_t n) {
  Matrix r(n, Vec(n));
  for (size_t i = 0; i < n; ++i) r[i][i] = Scalar(1);
  return r;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return a;
  Matrix r(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Matrix r(n, Vec(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      Scalar s;
      for (size_t l = 0; l < k; ++l)
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) s += a[i][l] * b[l][j];
      r[i][j] = s;
    }
  return r;
}

Vec matvec(const Matrix& a, const Vec& x) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero() && !x[j].is_zero()) r[i] += a[i][j] * x[j];
  return r;
}

namespace {

size_t weight(const Scalar& s) { return s.num().size() + s.den().size(); }

// pick the lightest non-zero pivot in column c at or below row r
long pick_pivot(const Matrix& m, size_t r, size_t c) {
  long best = -1;
  size_t bw = 0;
  for (size_t i = r; i < m.size(); ++i) {
    if (m[i][c].is_zero()) continue;
    size_t w = weight(m[i][c]);
    if (best < 0 || w < bw) {
      best = static_cast<long>(i);
      bw = w;
    }
  }
  return best;
}

}  // namespace

Matrix inverse(const Matrix& a) {
  size_t n = a.size();
  Matrix m = a, inv = identity(n);
  for (size_t c = 0; c < n; ++c) {
    long p = pick_pivot(m, c, c);
    if (p < 0) throw std::domain_error("singular matrix");
    std::swap(m[c], m[p]);
    std::swap(inv[c], inv[p]);
    Scalar pinv = m[c][c].inverse();
    for (size_t j = 0; j < n; ++j) {
      if (!m[c][j].is_zero()) m[c][j] *= pinv;
      if (!inv[c][j].is_zero()) inv[c][j] *= pinv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (size_t j = 0; j < n; ++j) {
        if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
        if (!inv[c][j].is_zero()) inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Vec solve(const Matrix& a, const Vec& b) {
  size_t n = a.size();
  Matrix m = a;
  Vec x = b;
  for (size_t c = 0; c < n; ++c) {
    long p = pick_pivot(m, c, c);
    if (p < 0) throw std::domain_error("singular matrix");
    std::swap(m[c], m[p]);
    std::swap(x[c], x[p]);
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j)
        if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
      if (!x[c].is_zero()) x[i] -= f * x[c];
    }
  }
  for (size_t c = n; c-- > 0;) {
    Scalar s = x[c];
    for (size_t j = c + 1; j < n; ++j)
      if (!m[c][j].is_zero() && !x[j].is_zero()) s -= m[c][j] * x[j];
    x[c] = s / m[c][c];
  }
  return x;
}

// Bareiss elimination on polynomial numerators; each row is first cleared of
// denominators by its lcm
Scalar determinant(const Matrix& a) {
  size_t n = a.size();
  if (n == 0) return Scalar(1);
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  Poly scale(1);
  for (size_t i = 0; i < n; ++i) {
    Poly l(1);
    for (auto& x : a[i]) {
      if (x.is_zero() || x.den().is_one()) continue;
      Poly g = gcd(l, x.den()), q;
      Poly::divide(x.den(), g, &q);
      l *= q;
    }
    scale *= l;
    for (size_t j = 0; j < n; ++j) {
      if (a[i][j].is_zero()) continue;
      Poly q;
      Poly::divide(l, a[i][j].den(), &q);
      m[i][j] = a[i][j].num() * q;
    }
  }
  Poly prev(1);
  bool neg = false;
  for (size_t c = 0; c < n; ++c) {
    long p = -1;
    for (size_t i = c; i < n; ++i)
      if (!m[i][c].is_zero() && (p < 0 || m[i][c].size() < m[p][c].size())) p = static_cast<long>(i);
    if (p < 0) return Scalar(0);
    if (static_cast<size_t>(p) != c) {
      std::swap(m[c], m[p]);
      neg = !neg;
    }
    for (size_t i = c + 1; i < n; ++i) {
      for (size_t j = c + 1; j < n; ++j) {
        Poly x = m[c][c] * m[i][j];
        if (!m[i][c].is_zero() && !m[c][j].is_zero()) x -= m[i][c] * m[c][j];
        if (!prev.is_one() && !x.is_zero()) {
          Poly q;
          if (!Poly::divide(x, prev, &q)) throw std::logic_error("inexact Bareiss step");
          x = std::move(q);
        }
        m[i][j] = std::move(x);
      }
      m[i][c] = Poly();
    }
    prev = m[c][c];
  }
  Scalar det(m[n - 1][n - 1], scale);
  return neg ? -det : det;
}

}  // namespace mukade
