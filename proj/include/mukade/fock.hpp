#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "mukade/linalg.hpp"
#include "mukade/partition.hpp"

namespace mukade {

enum class Side { ket, bra };

// Linear combination of boson basis states. A ket label (mu^(1),...,mu^(N))
// stands for prod_i a^(i)_{-mu^(i)} |0>, a bra label for <0| prod_i a^(i)_{mu^(i)}.
struct FockVector {
  Side side = Side::ket;
  int N = 1;
  std::map<NTuple, Scalar> terms;

  FockVector() = default;
  FockVector(Side s, int n) : side(s), N(n) {}
  static FockVector vacuum(Side s, int N);
  static FockVector basis(Side s, const NTuple& label, const Scalar& c = Scalar(1));

  void add(const NTuple& label, const Scalar& c);
  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector scaled(const Scalar& c) const;
  Scalar coeff(const NTuple& label) const;
  bool is_zero() const { return terms.empty(); }
  std::map<int, FockVector> by_level() const;
  bool operator==(const FockVector& o) const;
};

// <a_l | a_l> for a basis label
Scalar basis_norm(const NTuple& label);
Scalar fock_pairing(const FockVector& bra, const FockVector& ket);

// n -> Scalar, memoized; a default-constructed sequence is identically zero
class CoeffSeq {
 public:
  CoeffSeq() = default;
  explicit CoeffSeq(std::function<Scalar(int)> f);
  Scalar operator()(int n) const;
  bool is_zero() const { return !impl_; }
  CoeffSeq shifted(const Scalar& c, int sign) const;  // n -> f(n) c^{sign n}
  CoeffSeq plus(const CoeffSeq& o) const;

 private:
  struct Impl {
    std::function<Scalar(int)> f;
    std::mutex mu;
    std::vector<Scalar> cache;
    std::vector<bool> have;
  };
  std::shared_ptr<Impl> impl_;
};

// prefactor * exp(sum_i sum_n A^(i)_n a^(i)_{-n} z^n) exp(sum_i sum_n B^(i)_n a^(i)_n z^{-n})
struct VertexOperatorSpec {
  Scalar prefactor = Scalar(1);
  std::vector<CoeffSeq> A, B;

  static VertexOperatorSpec empty(int N);
  int N() const { return static_cast<int>(A.size()); }
  VertexOperatorSpec shifted(const Scalar& c) const;  // V(c z)
  VertexOperatorSpec compose(const VertexOperatorSpec& o) const;
};

// the z^{-n} mode of the operator applied to v
FockVector apply_vertex_mode(const VertexOperatorSpec& op, int n, const FockVector& v);

struct ModeOperatorSum {
  int N = 1;
  std::vector<std::pair<VertexOperatorSpec, Scalar>> terms;
};

FockVector apply_mode(const ModeOperatorSum& op, int n, const FockVector& v);

// gamma^m = (t/q)^{m/2}
Scalar gamma_pow(int m);
VertexOperatorSpec eta_spec(int N, int slot);
VertexOperatorSpec lambda_spec(int i, int N);
ModeOperatorSum X_current(int k, const std::vector<Scalar>& u);

// Fock module with fixed spectral parameters; caches PBW data per level.
class FockSpace {
 public:
  FockSpace(int N, std::vector<Scalar> u);
  int N() const { return N_; }
  const std::vector<Scalar>& params() const { return u_; }
  const ModeOperatorSum& X(int k) const { return X_.at(k - 1); }

  const std::vector<NTuple>& labels(int level) const;
  FockVector pbw_state(const NTuple& label, Side side) const;
  // coefficients of a homogeneous vector in the PBW basis at its level
  Vec expand_pbw(const FockVector& v, int level) const;
  Matrix gram(int level) const;
  // columns are PBW states, rows boson labels, both in labels(level) order
  Matrix transition(int level, Side side) const;

 private:
  int N_;
  std::vector<Scalar> u_;
  std::vector<ModeOperatorSum> X_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<NTuple>> labels_;
  mutable std::map<std::pair<NTuple, int>, FockVector> states_;
  mutable std::map<std::pair<int, int>, Matrix> inv_;
  const Matrix& inverse_transition(int level, Side side) const;
};

Scalar kac_determinant(int N, int level, const std::vector<Scalar>& u);
// u-dependent factor prod_{rs<=n}((u1..uN)^2 prod_{i<j}(u_i - q^s t^-r u_j)(u_i - q^-r t^s u_j))^{P^(N)(n-rs)}
Scalar kac_u_factor(int N, int level, const std::vector<Scalar>& u);

}  // namespace mukade
