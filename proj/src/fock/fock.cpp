#include "mukade/fock.hpp"

#include <stdexcept>

namespace mukade {

FockVector FockVector::vacuum(Side s, int N) { return basis(s, NTuple(N)); }

FockVector FockVector::basis(Side s, const NTuple& label, const Scalar& c) {
  FockVector v(s, static_cast<int>(label.size()));
  v.add(label, c);
  return v;
}

void FockVector::add(const NTuple& label, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(label);
  if (it == terms.end()) {
    terms.emplace(label, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  if (r.terms.empty()) {
    r.side = o.side;
    r.N = o.N;
  }
  for (auto& kv : o.terms) r.add(kv.first, kv.second);
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const { return *this + o.scaled(Scalar(-1)); }

FockVector FockVector::scaled(const Scalar& c) const {
  FockVector r(side, N);
  if (c.is_zero()) return r;
  for (auto& kv : terms) r.terms.emplace(kv.first, kv.second * c);
  return r;
}

Scalar FockVector::coeff(const NTuple& label) const {
  auto it = terms.find(label);
  return it == terms.end() ? Scalar(0) : it->second;
}

std::map<int, FockVector> FockVector::by_level() const {
  std::map<int, FockVector> r;
  for (auto& kv : terms) {
    auto& v = r.try_emplace(total_size(kv.first), side, N).first->second;
    v.terms.emplace(kv.first, kv.second);
  }
  return r;
}

bool FockVector::operator==(const FockVector& o) const {
  if (side != o.side) return false;
  for (auto& kv : terms)
    if (kv.second != o.coeff(kv.first)) return false;
  for (auto& kv : o.terms)
    if (kv.second != coeff(kv.first)) return false;
  return true;
}

Scalar basis_norm(const NTuple& label) {
  Scalar r(1);
  for (auto& p : label) {
    r *= Scalar(z_lambda(p));
    for (int x : p.parts()) r *= kappa(x);
  }
  return r;
}

Scalar fock_pairing(const FockVector& bra, const FockVector& ket) {
  if (bra.side != Side::bra || ket.side != Side::ket)
    throw std::invalid_argument("fock_pairing: side mismatch");
  Scalar r;
  for (auto& kv : bra.terms) {
    auto it = ket.terms.find(kv.first);
    if (it == ket.terms.end()) continue;
    r += kv.second * it->second * basis_norm(kv.first);
  }
  return r;
}

// ---------------------------------------------------------------------------

CoeffSeq::CoeffSeq(std::function<Scalar(int)> f) : impl_(std::make_shared<Impl>()) {
  impl_->f = std::move(f);
}

Scalar CoeffSeq::operator()(int n) const {
  if (!impl_) return Scalar(0);
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (n < static_cast<int>(impl_->have.size()) && impl_->have[n]) return impl_->cache[n];
  }
  Scalar v = impl_->f(n);
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (n >= static_cast<int>(impl_->have.size())) {
    impl_->have.resize(n + 1, false);
    impl_->cache.resize(n + 1);
  }
  impl_->cache[n] = v;
  impl_->have[n] = true;
  return v;
}

CoeffSeq CoeffSeq::shifted(const Scalar& c, int sign) const {
  if (!impl_) return *this;
  CoeffSeq self = *this;
  return CoeffSeq([self, c, sign](int n) { return self(n) * c.pow(sign * n); });
}

CoeffSeq CoeffSeq::plus(const CoeffSeq& o) const {
  if (!impl_) return o;
  if (!o.impl_) return *this;
  CoeffSeq a = *this, b = o;
  return CoeffSeq([a, b](int n) { return a(n) + b(n); });
}

VertexOperatorSpec VertexOperatorSpec::empty(int N) {
  VertexOperatorSpec s;
  s.A.resize(N);
  s.B.resize(N);
  return s;
}

VertexOperatorSpec VertexOperatorSpec::shifted(const Scalar& c) const {
  VertexOperatorSpec r = *this;
  for (auto& a : r.A) a = a.shifted(c, 1);
  for (auto& b : r.B) b = b.shifted(c, -1);
  return r;
}

VertexOperatorSpec VertexOperatorSpec::compose(const VertexOperatorSpec& o) const {
  VertexOperatorSpec r = *this;
  r.prefactor = prefactor * o.prefactor;
  for (int i = 0; i < N(); ++i) {
    r.A[i] = A[i].plus(o.A[i]);
    r.B[i] = B[i].plus(o.B[i]);
  }
  return r;
}

namespace {

struct Option {
  int removed;
  Scalar coeff;
  std::vector<int> rest;
};

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ways of stripping parts of mu, each stripped part k contributing k kappa_k F_k
std::vector<Option> strip_options(const Partition& mu, const CoeffSeq& F) {
  std::vector<Option> out;
  if (F.is_zero() || mu.empty()) {
    out.push_back({0, Scalar(1), mu.parts()});
    return out;
  }
  auto m = mu.multiplicities();
  std::vector<int> pick(m.size(), 0);
  for (;;) {
    Option o{0, Scalar(1), {}};
    for (size_t k = 0; k < m.size(); ++k) {
      int part = static_cast<int>(k) + 1;
      if (pick[k]) {
        Scalar f = Scalar(part) * kappa(part) * F(part);
        o.coeff *= Scalar(binom(m[k], pick[k])) * f.pow(pick[k]);
        o.removed += part * pick[k];
      }
      for (int r = 0; r < m[k] - pick[k]; ++r) o.rest.push_back(part);
    }
    if (!o.coeff.is_zero()) out.push_back(std::move(o));
    size_t k = 0;
    while (k < m.size() && pick[k] == m[k]) pick[k++] = 0;
    if (k == m.size()) break;
    pick[k]++;
  }
  return out;
}

Scalar creation_coeff(const Partition& nu, const CoeffSeq& G) {
  if (nu.empty()) return Scalar(1);
  if (G.is_zero()) return Scalar(0);
  Scalar r(1);
  auto m = nu.multiplicities();
  for (size_t k = 0; k < m.size(); ++k) {
    if (!m[k]) continue;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m[k]);
    r *= G(static_cast<int>(k) + 1).pow(m[k]) / Scalar(f);
  }
  return r;
}

Partition merge(const std::vector<int>& a, const Partition& b) {
  std::vector<int> v = a;
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition(v);
}

}  // namespace

FockVector apply_vertex_mode(const VertexOperatorSpec& op, int n, const FockVector& v) {
  const int N = op.N();
  if (v.N != N) throw std::invalid_argument("apply_vertex_mode: N mismatch");
  FockVector out(v.side, N);
  bool ket = v.side == Side::ket;
  const auto& strip = ket ? op.B : op.A;
  const auto& create = ket ? op.A : op.B;
  std::map<int, std::vector<std::pair<NTuple, Scalar>>> created;  // by total size
  auto creations = [&](int C) -> const std::vector<std::pair<NTuple, Scalar>>& {
    auto it = created.find(C);
    if (it != created.end()) return it->second;
    std::vector<std::pair<NTuple, Scalar>> list;
    for (auto& nu : ntuples(N, C)) {
      Scalar c(1);
      for (int i = 0; i < N && !c.is_zero(); ++i) c *= creation_coeff(nu[i], create[i]);
      if (!c.is_zero()) list.push_back({nu, c});
    }
    return created[C] = std::move(list);
  };
  for (auto& [label, coef] : v.terms) {
    std::vector<std::vector<Option>> opts(N);
    for (int i = 0; i < N; ++i) opts[i] = strip_options(label[i], strip[i]);
    std::vector<size_t> idx(N, 0);
    for (;;) {
      int removed = 0;
      Scalar c = coef * op.prefactor;
      for (int i = 0; i < N; ++i) {
        removed += opts[i][idx[i]].removed;
        c *= opts[i][idx[i]].coeff;
      }
      int C = ket ? removed - n : removed + n;
      if (C >= 0) {
        for (auto& [nu, cc] : creations(C)) {
          NTuple res(N);
          for (int i = 0; i < N; ++i) res[i] = merge(opts[i][idx[i]].rest, nu[i]);
          out.add(res, c * cc);
        }
      }
      int i = 0;
      while (i < N && ++idx[i] == opts[i].size()) idx[i++] = 0;
      if (i == N) break;
    }
  }
  return out;
}

FockVector apply_mode(const ModeOperatorSum& op, int n, const FockVector& v) {
  FockVector out(v.side, v.N);
  for (auto& [spec, w] : op.terms) out = out + apply_vertex_mode(spec, n, v).scaled(w);
  return out;
}

Scalar gamma_pow(int m) { return Scalar::qt_half(-m, m); }

VertexOperatorSpec eta_spec(int N, int slot) {
  VertexOperatorSpec s = VertexOperatorSpec::empty(N);
  s.A[slot - 1] = CoeffSeq([](int n) { return (1 - Scalar::qt(0, -n)) / Scalar(n); });
  s.B[slot - 1] = CoeffSeq([](int n) { return -(1 - Scalar::qt(0, n)) / Scalar(n); });
  return s;
}

VertexOperatorSpec lambda_spec(int i, int N) {
  VertexOperatorSpec s = VertexOperatorSpec::empty(N);
  for (int j = 1; j < i; ++j) {
    s.A[j - 1] = CoeffSeq([j](int n) {
      return (1 - Scalar::qt(0, -n)) * (1 - gamma_pow(2 * n)) * gamma_pow((j - 1) * n) / Scalar(n);
    });
  }
  s.A[i - 1] = CoeffSeq([i](int n) { return (1 - Scalar::qt(0, -n)) * gamma_pow((i - 1) * n) / Scalar(n); });
  s.B[i - 1] = CoeffSeq([i](int n) { return -(1 - Scalar::qt(0, n)) * gamma_pow(-(i - 1) * n) / Scalar(n); });
  return s;
}

ModeOperatorSum X_current(int k, const std::vector<Scalar>& u) {
  const int N = static_cast<int>(u.size());
  ModeOperatorSum out;
  out.N = N;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  if (k > N || k < 1) return out;
  Scalar qt = Scalar::qt(1, -1);
  for (;;) {
    VertexOperatorSpec spec = VertexOperatorSpec::empty(N);
    Scalar w(1);
    for (int m = 0; m < k; ++m) {
      spec = spec.compose(lambda_spec(idx[m], N).shifted(qt.pow(m)));
      w *= u[idx[m] - 1];
    }
    out.terms.push_back({spec, w});
    int m = k - 1;
    while (m >= 0 && idx[m] == N - (k - 1 - m)) --m;
    if (m < 0) break;
    idx[m]++;
    for (int r = m + 1; r < k; ++r) idx[r] = idx[r - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

FockSpace::FockSpace(int N, std::vector<Scalar> u) : N_(N), u_(std::move(u)) {
  if (static_cast<int>(u_.size()) != N_) throw std::invalid_argument("FockSpace: parameter count");
  for (int k = 1; k <= N_; ++k) X_.push_back(X_current(k, u_));
}

const std::vector<NTuple>& FockSpace::labels(int level) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = labels_.find(level);
  if (it != labels_.end()) return it->second;
  return labels_[level] = ntuples(N_, level);
}

FockVector FockSpace::pbw_state(const NTuple& label, Side side) const {
  auto key = std::make_pair(label, side == Side::ket ? 0 : 1);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = states_.find(key);
    if (it != states_.end()) return it->second;
  }
  int j = -1;
  for (int i = 0; i < N_; ++i)
    if (!label[i].empty()) {
      j = i;
      break;
    }
  FockVector r;
  if (j < 0) {
    r = FockVector::vacuum(side, N_);
  } else {
    // |X_l> = X^(j)_{-l_1} |X_l'>,  <X_l| = <X_l'| X^(j)_{l_1}
    NTuple rest = label;
    std::vector<int> parts = label[j].parts();
    int first = parts.front();
    parts.erase(parts.begin());
    rest[j] = Partition(parts);
    FockVector inner = pbw_state(rest, side);
    r = apply_mode(X(j + 1), side == Side::ket ? -first : first, inner);
  }
  std::lock_guard<std::mutex> lock(mu_);
  states_.emplace(key, r);
  return r;
}

Matrix FockSpace::transition(int level, Side side) const {
  const auto& L = labels(level);
  size_t d = L.size();
  Matrix T(d, Vec(d));
  for (size_t c = 0; c < d; ++c) {
    FockVector st = pbw_state(L[c], side);
    for (size_t r = 0; r < d; ++r) T[r][c] = st.coeff(L[r]);
  }
  return T;
}

const Matrix& FockSpace::inverse_transition(int level, Side side) const {
  auto key = std::make_pair(level, side == Side::ket ? 0 : 1);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = inv_.find(key);
    if (it != inv_.end()) return it->second;
  }
  Matrix inv = inverse(transition(level, side));
  std::lock_guard<std::mutex> lock(mu_);
  return inv_.emplace(key, std::move(inv)).first->second;
}

Vec FockSpace::expand_pbw(const FockVector& v, int level) const {
  const auto& L = labels(level);
  Vec f(L.size());
  for (size_t r = 0; r < L.size(); ++r) f[r] = v.coeff(L[r]);
  for (auto& kv : v.terms)
    if (total_size(kv.first) != level) throw std::invalid_argument("expand_pbw: inhomogeneous vector");
  return matvec(inverse_transition(level, v.side), f);
}

Matrix FockSpace::gram(int level) const {
  const auto& L = labels(level);
  Matrix G(L.size(), Vec(L.size()));
  for (size_t i = 0; i < L.size(); ++i)
    for (size_t j = 0; j < L.size(); ++j)
      G[i][j] = fock_pairing(pbw_state(L[i], Side::bra), pbw_state(L[j], Side::ket));
  return G;
}

Scalar kac_determinant(int N, int level, const std::vector<Scalar>& u) {
  // G = S^T D T with S, T the bra and ket transition matrices and D the
  // diagonal of boson norms
  FockSpace F(N, u);
  Scalar d = determinant(F.transition(level, Side::bra)) * determinant(F.transition(level, Side::ket));
  for (auto& l : F.labels(level)) d *= basis_norm(l);
  return d;
}

Scalar kac_u_factor(int N, int level, const std::vector<Scalar>& u) {
  Scalar e(1);
  for (auto& x : u) e *= x;
  Scalar r(1);
  for (int rr = 1; rr <= level; ++rr)
    for (int ss = 1; rr * ss <= level; ++ss) {
      Scalar base = e * e;
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
          base *= (u[i] - Scalar::qt(ss, -rr) * u[j]) * (u[i] - Scalar::qt(-rr, ss) * u[j]);
      r *= base.pow(count_ntuples(N, level - rr * ss));
    }
  return r;
}

}  // namespace mukade
