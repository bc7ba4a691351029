#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "mukade/fock.hpp"
#include "mukade/macdonald.hpp"

namespace mukade {

// e_l = 1 + (t-1) sum_i (q^{l_i} - 1) t^{-i};  eps = sum_k u_k e_{l^(k)}
Scalar e_lambda(const Partition& l);
Scalar eigenvalue(const NTuple& l, const std::vector<Scalar>& u);

// prod_i f_i(a^(i)) |0> (or <0| prod_i f_i(a^(i)_n) for a bra)
FockVector product_state(const std::vector<SymFunc>& f, Side side);
FockVector product_P(const NTuple& l, Side side);
FockVector product_Q(const NTuple& l, Side side);

struct GenMacState {
  NTuple label;
  FockVector vector;
  Scalar eigenvalue;
  Side side;
};

struct IntegralFormConstants {
  Scalar C_plus, C_minus, xi_plus, xi_minus;
};
IntegralFormConstants integral_constants(const NTuple& l, const std::vector<Scalar>& u);

// ((-1)^N gamma^2 e_N)^{|l|} prod_i (u_i^{|l_i|} gamma^{-2|l_i|} g_{l_i})^{2-N} prod_{i,j} N_{l_i l_j}(q u_i / t u_j)
Scalar K_norm_formula(const NTuple& l, const std::vector<Scalar>& u);

class GenMac {
 public:
  GenMac(int N, std::vector<Scalar> u);
  int N() const { return fock_.N(); }
  const FockSpace& fock() const { return fock_; }
  const std::vector<Scalar>& params() const { return fock_.params(); }

  // throws std::domain_error("eigenvalue collision") at degenerate parameters and
  // std::logic_error if X^(1)_0 fails to be triangular
  const GenMacState& P_state(const NTuple& l, Side side) const;
  FockVector Q_state(const NTuple& l) const;
  FockVector K_state(const NTuple& l, Side side) const;
  // rows labels(level) in the K basis, columns PBW labels; sign +1 ket, -1 bra
  Matrix alpha_matrix(int level, int sign) const;
  Vec alpha_row(const NTuple& l, int sign) const;
  bool norm_check(const NTuple& l) const;

 private:
  FockSpace fock_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<NTuple, int>, std::unique_ptr<GenMacState>> cache_;
};

}  // namespace mukade
