#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "mukade/genmac.hpp"

namespace mukade {

// X^(i)_n V - x X^(i)_{n-1} V = V X^(i)_n - c x V X^(i)_{n-1},  c = (t/q)^i
struct ModeRelation {
  int i;
  int n;
  Scalar c;
};
ModeRelation mode_relation(int i, int n);

enum class Reduction { bra_first, ket_first };

// <X_l(v)| V(x) |X_m(u)> on PBW states, filled on demand by the mode relation.
// bra_first peels the bra whenever it is nonempty; ket_first moves ket modes
// through V whenever the ket is nonempty.
class MukadeTable {
 public:
  MukadeTable(int N, std::vector<Scalar> v, std::vector<Scalar> u, Scalar x, int max_level = 6);
  int N() const { return N_; }
  const Scalar& x() const { return x_; }
  int max_level() const { return max_level_; }
  const GenMac& bra_genmac() const { return bra_; }
  const GenMac& ket_genmac() const { return ket_; }
  const FockSpace& bra_space() const { return bra_.fock(); }
  const FockSpace& ket_space() const { return ket_.fock(); }

  // throws std::out_of_range past max_level
  Scalar element(const NTuple& l, const NTuple& m, Reduction r = Reduction::bra_first) const;
  // <bra| V |ket> for arbitrary (possibly inhomogeneous) vectors
  Scalar sandwich(const FockVector& bra, const FockVector& ket, Reduction r = Reduction::bra_first) const;
  // <K_l(v)| V |K_m(u)>
  Scalar K_element(const NTuple& l, const NTuple& m) const;
  size_t size() const;

 private:
  int N_;
  Scalar x_;
  int max_level_;
  GenMac bra_, ket_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<NTuple, NTuple, int>, Scalar> memo_;
};

// <b|(X_n V - x X_{n-1} V - V X_n + c x V X_{n-1})|k>, zero when the table is consistent
Scalar mode_relation_defect(const MukadeTable& T, const ModeRelation& rel, const FockVector& bra,
                            const FockVector& ket, Reduction r = Reduction::bra_first);

// closed form for <K_l(v)|V(x)|K_m(u)>
Scalar factorization_formula(const NTuple& l, const NTuple& m, const std::vector<Scalar>& v,
                             const std::vector<Scalar>& u, const Scalar& x);

struct FactorizationCheck {
  NTuple l, m;
  Scalar lhs, rhs;
  bool ok;
};
FactorizationCheck verify_factorization(const MukadeTable& T, const NTuple& l, const NTuple& m);

// coefficient of (e_N(u) z2 / e_N(v) z1)^k in <0|V^{w,v}(z1) V^{v,u}(z2)|0> through the
// |K> resolution of the identity; k = 0..kmax
std::vector<Scalar> two_point(const std::vector<Scalar>& w, const std::vector<Scalar>& v,
                              const std::vector<Scalar>& u, int kmax);

}  // namespace mukade
