#pragma once

#include <vector>

#include "mukade/partition.hpp"

namespace mukade {

Scalar nekrasov(const Partition& l, const Partition& m, const Scalar& u);

// predicted non-vanishing of N_{l,m}(q^n t^m) from the containment criterion;
// returns true when the factor is predicted to vanish. Throws outside the two branches.
bool nekrasov_vanishes(const Partition& l, const Partition& m, int n, int mm);

// coefficient of (e_N(u) z2 / e_N(v) z1)^k in <0|V(z1)V(z2)|0>, k = 0..kmax
std::vector<Scalar> conformal_block(const std::vector<Scalar>& w, const std::vector<Scalar>& v,
                                    const std::vector<Scalar>& u, int kmax);

}  // namespace mukade
