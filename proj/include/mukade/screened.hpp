#pragma once

#include <map>
#include <vector>

#include "mukade/fock.hpp"
#include "mukade/hyperseries.hpp"

namespace mukade {

// ((t u_i/u_{k+1}; q)_{r_i} / (q u_i/u_{k+1}; q)_{r_i})_i, the weight of the
// (y_i/y_{i-1})^{r_i} term in the expansion of Phi^(k)
Scalar screened_weight(const std::vector<int>& r, const std::vector<Scalar>& u);

// V^(n)(x_1..x_|n|)|0> = Phi^(0)(x_1)...Phi^(N-1)(x_|n|)|0> at one level, with the
// screening variables integrated out. Keys are x-exponents; only terms of weight
// sum_j (j-1) alpha_j <= W are kept (every factor raises this weight).
std::map<std::vector<int>, FockVector> vn_vacuum_image(const std::vector<int>& profile, const std::vector<Scalar>& u,
                                                       int level, int W);

// coefficient of x^level in Phi^(k)(x)|0>, Phi^(k) : F_{t^{-delta_{k+1}} u} -> F_u
FockVector screened_vacuum_image(int N, int k, const std::vector<Scalar>& u, int level);
// <bra| Phi^(k)(x) |0>, the coefficient of x^{level of bra}
Scalar screened_matrix_element(const FockVector& bra, int k, const std::vector<Scalar>& u);

// [x^{-l} f(x; s | q, q/t) V^(n)(x)|0>]_{x,1} with s_{[i,k]} = q^{l^(i)_k} t^{1-k} u_i
FockVector genmac_via_screened(const NTuple& l, const std::vector<int>& profile, const std::vector<Scalar>& u);
// x^{-l} <P_l| V^(n)(x) |0> as a series in the ratios, to degree D
RatioSeries screened_P_series(const NTuple& l, const std::vector<int>& profile, const std::vector<Scalar>& u, int D);

Scalar R_coefficient(const NTuple& l, const std::vector<int>& profile, const std::vector<Scalar>& u);

// (u_1..u_N) with u_k replaced by q^s t^{-r} u_{k+1}
std::vector<Scalar> resonant_params(int N, int k, int r, int s);
// P_{(s^r)}(alpha^(k)_{-n})|0>, alpha^(k)_{-n} = gamma^{kn}(-gamma^n a^(k)_{-n} + a^(k+1)_{-n})
FockVector singular_vector(int N, int k, int r, int s);

}  // namespace mukade
