#include "mukade/mukade.hpp"

#include <stdexcept>

#include "mukade/nekrasov.hpp"

namespace mukade {

namespace {

struct Peeled {
  int slot;  // 0-based
  int first;
  NTuple rest;
};

bool is_vacuum(const NTuple& l) { return total_size(l) == 0; }

Peeled peel(const NTuple& l) {
  size_t j = 0;
  while (l[j].empty()) ++j;
  std::vector<int> parts = l[j].parts();
  int first = parts.front();
  parts.erase(parts.begin());
  NTuple rest = l;
  rest[j] = Partition(parts);
  return {static_cast<int>(j), first, rest};
}

Scalar elementary(const std::vector<Scalar>& u) {
  Scalar r(1);
  for (auto& x : u) r *= x;
  return r;
}

}  // namespace

ModeRelation mode_relation(int i, int n) { return {i, n, gamma_pow(2 * i)}; }

MukadeTable::MukadeTable(int N, std::vector<Scalar> v, std::vector<Scalar> u, Scalar x, int max_level)
    : N_(N), x_(std::move(x)), max_level_(max_level), bra_(N, std::move(v)), ket_(N, std::move(u)) {
  if (static_cast<int>(bra_.params().size()) != N || static_cast<int>(ket_.params().size()) != N)
    throw std::invalid_argument("MukadeTable: parameter lengths differ from N");
}

size_t MukadeTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

Scalar MukadeTable::element(const NTuple& l, const NTuple& m, Reduction r) const {
  if (total_size(l) > max_level_ || total_size(m) > max_level_)
    throw std::out_of_range("MukadeTable: level bound exceeded");
  bool lv = is_vacuum(l), mv = is_vacuum(m);
  if (lv && mv) return Scalar(1);
  auto key = std::make_tuple(l, m, static_cast<int>(r));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const FockSpace& B = bra_space();
  const FockSpace& K = ket_space();
  bool peel_bra = r == Reduction::bra_first ? !lv : mv;
  Scalar res;
  if (peel_bra) {
    // <l'|X_a V|m> = x <l'|X_{a-1} V|m> + <l'|V X_a|m> - c x <l'|V X_{a-1}|m>
    Peeled p = peel(l);
    auto rel = mode_relation(p.slot + 1, p.first);
    FockVector b = B.pbw_state(p.rest, Side::bra);
    FockVector k = K.pbw_state(m, Side::ket);
    const auto& Xb = B.X(rel.i);
    const auto& Xk = K.X(rel.i);
    res = x_ * sandwich(apply_mode(Xb, rel.n - 1, b), k, r) + sandwich(b, apply_mode(Xk, rel.n, k), r) -
          rel.c * x_ * sandwich(b, apply_mode(Xk, rel.n - 1, k), r);
  } else {
    // <l|V X_{-a}|m'> = (c x)^{-1} (<l|V X_{1-a}|m'> - <l|X_{1-a} V|m'> + x <l|X_{-a} V|m'>)
    Peeled p = peel(m);
    auto rel = mode_relation(p.slot + 1, 1 - p.first);
    FockVector b = B.pbw_state(l, Side::bra);
    FockVector k = K.pbw_state(p.rest, Side::ket);
    const auto& Xb = B.X(rel.i);
    const auto& Xk = K.X(rel.i);
    res = (sandwich(b, apply_mode(Xk, rel.n, k), r) - sandwich(apply_mode(Xb, rel.n, b), k, r) +
           x_ * sandwich(apply_mode(Xb, rel.n - 1, b), k, r)) /
          (rel.c * x_);
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(key, res);
  return res;
}

Scalar MukadeTable::sandwich(const FockVector& bra, const FockVector& ket, Reduction r) const {
  if (bra.side != Side::bra || ket.side != Side::ket) throw std::invalid_argument("sandwich: wrong sides");
  Scalar s;
  if (bra.is_zero() || ket.is_zero()) return s;
  auto bl = bra.by_level();
  auto kl = ket.by_level();
  for (auto& [lb, bv] : bl) {
    Vec a = bra_space().expand_pbw(bv, lb);
    const auto& LB = bra_space().labels(lb);
    for (auto& [lk, kv] : kl) {
      Vec c = ket_space().expand_pbw(kv, lk);
      const auto& LK = ket_space().labels(lk);
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < c.size(); ++j) {
          if (c[j].is_zero()) continue;
          s += a[i] * c[j] * element(LB[i], LK[j], r);
        }
      }
    }
  }
  return s;
}

Scalar MukadeTable::K_element(const NTuple& l, const NTuple& m) const {
  return sandwich(bra_.K_state(l, Side::bra), ket_.K_state(m, Side::ket));
}

Scalar mode_relation_defect(const MukadeTable& T, const ModeRelation& rel, const FockVector& bra,
                            const FockVector& ket, Reduction r) {
  const auto& Xb = T.bra_space().X(rel.i);
  const auto& Xk = T.ket_space().X(rel.i);
  const Scalar& x = T.x();
  return T.sandwich(apply_mode(Xb, rel.n, bra), ket, r) - x * T.sandwich(apply_mode(Xb, rel.n - 1, bra), ket, r) -
         T.sandwich(bra, apply_mode(Xk, rel.n, ket), r) +
         rel.c * x * T.sandwich(bra, apply_mode(Xk, rel.n - 1, ket), r);
}

Scalar factorization_formula(const NTuple& l, const NTuple& m, const std::vector<Scalar>& v,
                             const std::vector<Scalar>& u, const Scalar& x) {
  int N = static_cast<int>(u.size());
  Scalar g2 = gamma_pow(2);
  Scalar r = ((-g2).pow(N) * elementary(u) * x).pow(total_size(l)) / (g2 * x).pow(total_size(m));
  Scalar qt1 = Scalar::q() / Scalar::t();
  for (int i = 0; i < N; ++i) {
    int ls = l[i].size(), ms = m[i].size();
    r *= u[i].pow(ms) * flaming_factors(m[i]).g;
    r /= (v[i].pow(ls) * flaming_factors(l[i]).g).pow(N - 1);
    for (int j = 0; j < N; ++j) r *= nekrasov(l[i], m[j], qt1 * v[i] / u[j]);
  }
  return r;
}

FactorizationCheck verify_factorization(const MukadeTable& T, const NTuple& l, const NTuple& m) {
  FactorizationCheck c{l, m, T.K_element(l, m),
                       factorization_formula(l, m, T.bra_genmac().params(), T.ket_genmac().params(), T.x()),
                       false};
  c.ok = c.lhs == c.rhs;
  return c;
}

std::vector<Scalar> two_point(const std::vector<Scalar>& w, const std::vector<Scalar>& v,
                              const std::vector<Scalar>& u, int kmax) {
  int N = static_cast<int>(v.size());
  Scalar z1 = Scalar::var(Symbols::z(1)), z2 = Scalar::var(Symbols::z(2));
  MukadeTable left(N, w, v, z1, kmax), right(N, v, u, z2, kmax);
  Scalar ratio = elementary(u) * z2 / (elementary(v) * z1);
  std::vector<Scalar> out;
  NTuple vac(N);
  for (int k = 0; k <= kmax; ++k) {
    Scalar sum;
    for (auto& lam : ntuples(N, k))
      sum += left.K_element(vac, lam) * right.K_element(lam, vac) / K_norm_formula(lam, v);
    out.push_back(sum / ratio.pow(k));
  }
  return out;
}

}  // namespace mukade
