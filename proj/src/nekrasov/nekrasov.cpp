#include "mukade/nekrasov.hpp"

#include <stdexcept>

namespace mukade {

Scalar nekrasov(const Partition& l, const Partition& m, const Scalar& u) {
  Scalar r(1);
  for (auto [i, j] : l.cells()) {
    int a = l.arm_leg(i, j).first, lg = m.arm_leg(i, j).second;
    r *= 1 - u * Scalar::qt(a, lg + 1);
  }
  for (auto [i, j] : m.cells()) {
    int a = m.arm_leg(i, j).first, lg = l.arm_leg(i, j).second;
    r *= 1 - u * Scalar::qt(-a - 1, -lg);
  }
  return r;
}

bool nekrasov_vanishes(const Partition& l, const Partition& m, int n, int mm) {
  if (mm >= 0 && n <= 0) return !m.contains(truncate_B(l, -n, mm));
  if (mm <= -1 && n >= 1) return !l.contains(truncate_B(m, n - 1, -mm - 1));
  throw std::invalid_argument("nekrasov_vanishes: (n, m) outside both branches");
}

std::vector<Scalar> conformal_block(const std::vector<Scalar>& w, const std::vector<Scalar>& v,
                                    const std::vector<Scalar>& u, int kmax) {
  size_t N = v.size();
  if (w.size() != N || u.size() != N) throw std::invalid_argument("conformal_block: parameter lengths differ");
  Scalar qt1 = Scalar::q() / Scalar::t();
  std::vector<Scalar> out;
  for (int k = 0; k <= kmax; ++k) {
    Scalar sum;
    for (auto& lam : ntuples(static_cast<int>(N), k)) {
      Scalar num(1), den(1);
      for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
          num *= nekrasov(Partition(), lam[j], qt1 * w[i] / v[j]) * nekrasov(lam[i], Partition(), qt1 * v[i] / u[j]);
          den *= nekrasov(lam[i], lam[j], qt1 * v[i] / v[j]);
        }
      sum += num / den;
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace mukade
