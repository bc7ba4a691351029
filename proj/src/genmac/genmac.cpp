#include "mukade/genmac.hpp"

#include <algorithm>
#include <stdexcept>

#include "mukade/nekrasov.hpp"

namespace mukade {

Scalar e_lambda(const Partition& l) {
  Scalar s;
  for (int i = 1; i <= l.length(); ++i) s += (Scalar::qt(l[i], 0) - 1) * Scalar::qt(0, -i);
  return 1 + (Scalar::t() - 1) * s;
}

Scalar eigenvalue(const NTuple& l, const std::vector<Scalar>& u) {
  Scalar r;
  for (size_t k = 0; k < l.size(); ++k) r += u[k] * e_lambda(l[k]);
  return r;
}

FockVector product_state(const std::vector<SymFunc>& f, Side side) {
  int N = static_cast<int>(f.size());
  FockVector out(side, N);
  NTuple label(N);
  auto rec = [&](auto&& self, int i, const Scalar& c) -> void {
    if (i == N) {
      out.add(label, c);
      return;
    }
    for (auto& [l, x] : f[i].terms) {
      label[i] = l;
      self(self, i + 1, c * x);
    }
  };
  rec(rec, 0, Scalar(1));
  return out;
}

FockVector product_P(const NTuple& l, Side side) {
  std::vector<SymFunc> f;
  for (auto& p : l) f.push_back(macdonald_P(p));
  return product_state(f, side);
}

FockVector product_Q(const NTuple& l, Side side) {
  std::vector<SymFunc> f;
  for (auto& p : l) f.push_back(macdonald_Q(p));
  return product_state(f, side);
}

namespace {

// strictly increasing along star order
int height(const NTuple& l) {
  int h = 0, suffix = 0;
  for (size_t k = l.size(); k-- > 0;) {
    suffix += l[k].size();
    h += suffix;
  }
  return h;
}

Scalar gamma_power(int m) { return Scalar::qt_half(-m, m); }

}  // namespace

IntegralFormConstants integral_constants(const NTuple& l, const std::vector<Scalar>& u) {
  int N = static_cast<int>(l.size());
  Scalar xp(1), xm(1);
  std::vector<int> sz(N);
  for (int i = 0; i < N; ++i) sz[i] = l[i].size();
  for (int i = 1; i <= N; ++i) {
    const Partition& li = l[i - 1];
    int s = sz[i - 1], nl = li.n(), nc = li.conjugate().n();
    int pre = 0, post = 0;
    for (int k = 1; k <= i; ++k) pre += sz[k - 1];
    for (int k = i; k <= N; ++k) post += sz[k - 1];
    if (((N - i + 1) * s) % 2) xp = -xp;
    xp *= u[i - 1].pow((i - N) * s + pre);
    // (q/t)^{(1-i)|l|/2} = gamma^{(i-1)|l|}
    xp *= gamma_power((i - 1) * s) * Scalar::qt((i - N) * (nc + s), (N - i - 1) * (nl + s));
    if ((i * s) % 2) xm = -xm;
    xm *= u[i - 1].pow((1 - i) * s + post);
    xm *= gamma_power((1 - i) * s) * Scalar::qt(0, s) * Scalar::qt((1 - i) * (nc + s), (i - 2) * (nl + s));
  }
  Scalar cprod(1);
  for (auto& p : l) cprod *= c_lambda(p);
  Scalar np(1), nm(1);
  Scalar qt1 = Scalar::q() / Scalar::t();
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      np *= nekrasov(l[i], l[j], qt1 * u[i] / u[j]);
      nm *= nekrasov(l[j], l[i], qt1 * u[j] / u[i]);
    }
  return {xp * np * cprod, xm * nm * cprod, xp, xm};
}

Scalar K_norm_formula(const NTuple& l, const std::vector<Scalar>& u) {
  int N = static_cast<int>(l.size());
  Scalar eN(1);
  for (auto& x : u) eN *= x;
  Scalar g2 = gamma_power(2);
  Scalar r = ((N % 2 ? Scalar(-1) : Scalar(1)) * g2 * eN).pow(total_size(l));
  Scalar qt1 = Scalar::q() / Scalar::t();
  for (int i = 0; i < N; ++i) {
    int s = l[i].size();
    Scalar f = u[i].pow(s) * gamma_power(-2 * s) * flaming_factors(l[i]).g;
    r *= f.pow(2 - N);
    for (int j = 0; j < N; ++j) r *= nekrasov(l[i], l[j], qt1 * u[i] / u[j]);
  }
  return r;
}

GenMac::GenMac(int N, std::vector<Scalar> u) : fock_(N, std::move(u)) {}

const GenMacState& GenMac::P_state(const NTuple& lam, Side side) const {
  auto key = std::make_pair(lam, side == Side::ket ? 0 : 1);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  int n = total_size(lam);
  const auto& u = params();
  // candidates: same size, star-below (ket) or star-above (bra)
  std::vector<NTuple> cand;
  for (auto& m : ntuples(N(), n)) {
    Order o = star_compare(m, lam);
    if (m == lam || (side == Side::ket && o == Order::less) || (side == Side::bra && o == Order::greater))
      cand.push_back(m);
  }
  // ket: X0 |P_m> = sum_v A[v][m] |P_v> with v star-below m; solve from the top
  std::sort(cand.begin(), cand.end(), [&](const NTuple& a, const NTuple& b) {
    int ha = height(a), hb = height(b);
    return side == Side::ket ? ha > hb : ha < hb;
  });
  std::map<NTuple, FockVector> image;
  for (auto& m : cand) image[m] = apply_mode(fock_.X(1), 0, product_P(m, side));
  auto coeff = [&](const FockVector& v, const NTuple& m) {
    Side dual = side == Side::ket ? Side::bra : Side::ket;
    FockVector q = product_Q(m, dual);
    return side == Side::ket ? fock_pairing(q, v) : fock_pairing(v, q);
  };
  Scalar eps = eigenvalue(lam, u);
  std::map<NTuple, Scalar> c;
  for (auto& m : cand) {
    if (m == lam) {
      Scalar d = coeff(image[m], m);
      if (!(d == eps)) throw std::logic_error("X0 diagonal entry differs from the eigenvalue");
      c[m] = Scalar(1);
      continue;
    }
    Scalar s;
    for (auto& [v, cv] : c) {
      if (cv.is_zero()) continue;
      s += coeff(image[v], m) * cv;
    }
    Scalar gap = eps - eigenvalue(m, u);
    if (gap.is_zero()) throw std::domain_error("eigenvalue collision");
    c[m] = s / gap;
  }
  // verify triangularity on the solved vector: the image has no component outside cand
  FockVector vec(side, N());
  for (auto& [m, cm] : c)
    if (!cm.is_zero()) vec = vec + product_P(m, side).scaled(cm);
  FockVector lhs = apply_mode(fock_.X(1), 0, vec);
  if (!(lhs == vec.scaled(eps))) throw std::logic_error("X0 is not triangular in the product basis");
  auto st = std::make_unique<GenMacState>(GenMacState{lam, vec, eps, side});
  std::lock_guard<std::mutex> lock(mu_);
  return *cache_.emplace(key, std::move(st)).first->second;
}

FockVector GenMac::Q_state(const NTuple& l) const {
  Scalar r(1);
  for (auto& p : l) r *= c_lambda(p) / cprime_lambda(p);
  return P_state(l, Side::ket).vector.scaled(r);
}

FockVector GenMac::K_state(const NTuple& l, Side side) const {
  auto C = integral_constants(l, params());
  return P_state(l, side).vector.scaled(side == Side::ket ? C.C_plus : C.C_minus);
}

Vec GenMac::alpha_row(const NTuple& l, int sign) const {
  Side side = sign > 0 ? Side::ket : Side::bra;
  return fock_.expand_pbw(K_state(l, side), total_size(l));
}

Matrix GenMac::alpha_matrix(int level, int sign) const {
  Matrix m;
  for (auto& l : fock_.labels(level)) m.push_back(alpha_row(l, sign));
  return m;
}

bool GenMac::norm_check(const NTuple& l) const {
  Scalar lhs = fock_pairing(K_state(l, Side::bra), K_state(l, Side::ket));
  return lhs == K_norm_formula(l, params());
}

}  // namespace mukade
