#pragma once

#include <map>
#include <ostream>

#include "mukade/linalg.hpp"
#include "mukade/partition.hpp"

namespace mukade {

// Symmetric function in the power-sum basis: terms[l] is the coefficient of p_l.
struct SymFunc {
  std::map<Partition, Scalar> terms;

  static SymFunc power(const Partition& l, const Scalar& c = Scalar(1));
  void add(const Partition& l, const Scalar& c);
  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;
  SymFunc scaled(const Scalar& c) const;
  Scalar coeff(const Partition& l) const;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const SymFunc& o) const;
  std::map<int, SymFunc> by_degree() const;
  std::string str() const;
};

// <p_l, p_m> = delta z_l prod (1-q^{l_i})/(1-t^{l_i})
Scalar power_norm(const Partition& l);
Scalar qt_inner(const SymFunc& f, const SymFunc& g);

// m_l in power sums
SymFunc monomial(const Partition& l);

enum class Extension { lex, content };
// P_l by Gram-Schmidt over a linear extension of dominance (cached)
SymFunc macdonald_P(const Partition& l, Extension ext = Extension::lex);
SymFunc macdonald_Q(const Partition& l);
// exp(sum_n (1/n)(1-t^n)/(1-q^n) p_n y^n) = sum_r g_r y^r
SymFunc g_r(int r);

// b_l(s) for a cell s = (i,j), 1 outside l
Scalar b_cell(const Partition& l, int i, int j);
// partitions l with l/m a horizontal r-strip
std::vector<Partition> horizontal_strips(const Partition& m, int r);
// g_r Q_m = sum_l coeff_l Q_l
std::map<Partition, Scalar> pieri_multiply(int r, const Partition& m);
// Pi(x,y) = sum_l P_l(x) Q_l(y) checked in each degree up to D
bool kernel_check(int D);

inline std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.str(); }

}  // namespace mukade
