#include "mukade/screened.hpp"

#include <stdexcept>

#include "mukade/genmac.hpp"
#include "mukade/macdonald.hpp"

namespace mukade {

namespace {

// Laurent polynomial in the screening and position variables, keyed by exponents
struct LPoly {
  std::map<std::vector<int>, Scalar> c;
};

struct Vars {
  std::vector<int> weight;  // position of the owning operator
  int size() const { return static_cast<int>(weight.size()); }
};

int weight_of(const Vars& V, const std::vector<int>& e) {
  int w = 0;
  for (int i = 0; i < V.size(); ++i) w += e[i] * V.weight[i];
  return w;
}

void add_term(LPoly& p, const std::vector<int>& e, const Scalar& a) {
  if (a.is_zero()) return;
  auto it = p.c.find(e);
  if (it == p.c.end()) {
    p.c.emplace(e, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) p.c.erase(it);
}

LPoly lp_constant(const Vars& V, const Scalar& a) {
  LPoly p;
  add_term(p, std::vector<int>(V.size(), 0), a);
  return p;
}

LPoly lp_mul(const Vars& V, const LPoly& a, const LPoly& b, int W) {
  LPoly r;
  for (auto& [e, x] : a.c) {
    int we = weight_of(V, e);
    for (auto& [f, y] : b.c) {
      if (we + weight_of(V, f) > W) continue;
      std::vector<int> g(e);
      for (size_t k = 0; k < g.size(); ++k) g[k] += f[k];
      add_term(r, g, x * y);
    }
  }
  return r;
}

LPoly lp_add(const LPoly& a, const LPoly& b) {
  LPoly r = a;
  for (auto& [e, x] : b.c) add_term(r, e, x);
  return r;
}

// exp(S) for S without constant term and with positive weights
LPoly lp_exp(const Vars& V, const LPoly& S, int W) {
  LPoly r = lp_constant(V, Scalar(1)), term = r;
  for (int k = 1; k <= W; ++k) {
    term = lp_mul(V, term, S, W);
    LPoly scaled;
    for (auto& [e, x] : term.c) add_term(scaled, e, x / Scalar(k));
    term = scaled;
    if (term.c.empty()) break;
    r = lp_add(r, term);
  }
  return r;
}

// one current: prod_j exp(sum_n A_j(n) a^(j)_{-n} v^n) exp(sum_n B_j(n) a^(j)_n v^{-n})
struct Current {
  int var;
  int op;
  std::vector<CoeffSeq> A, B;
};

Scalar kq(int n) { return (Scalar(1) - Scalar::q().pow(n)) / (Scalar(1) - Scalar::t().pow(n)); }

Current phi0_current(int N, int var, int op) {
  Current c{var, op, std::vector<CoeffSeq>(N), std::vector<CoeffSeq>(N)};
  c.A[0] = CoeffSeq([](int n) { return Scalar(1) / (Scalar(n) * kq(n)); });
  c.B[0] = CoeffSeq([](int n) {
    Scalar t = Scalar::t();
    return (Scalar(1) - gamma_pow(2 * n) * t.pow(n)) / (Scalar(n) * (Scalar(1) - Scalar::q().pow(-n))) * t.pow(-n);
  });
  for (int j = 2; j <= N; ++j)
    c.B[j - 1] = CoeffSeq([j](int n) {
      return (Scalar(1) - gamma_pow(2 * n)) / (Scalar(n) * (Scalar(1) - Scalar::q().pow(-n))) * gamma_pow((j - 1) * n);
    });
  return c;
}

// S^(i)(y) = phi_sc(gamma^{i-1} y) on slots i, i+1
Current screening_current(int N, int i, int var, int op) {
  Current c{var, op, std::vector<CoeffSeq>(N), std::vector<CoeffSeq>(N)};
  auto rt = [](int n) {
    return (Scalar(1) - Scalar::t().pow(-n)) / (Scalar(n) * (Scalar(1) - Scalar::q().pow(-n)));
  };
  c.A[i - 1] = CoeffSeq([i](int n) { return -gamma_pow(2 * n + (i - 1) * n) / (Scalar(n) * kq(n)); });
  c.B[i - 1] = CoeffSeq([i, rt](int n) { return rt(n) * gamma_pow(-(i - 1) * n); });
  c.A[i] = CoeffSeq([i](int n) { return gamma_pow(n + (i - 1) * n) / (Scalar(n) * kq(n)); });
  c.B[i] = CoeffSeq([i, rt](int n) { return -rt(n) * gamma_pow(-n - (i - 1) * n); });
  return c;
}

struct Layout {
  Vars V;
  std::vector<Current> currents;
  std::vector<int> type;                     // k of each operator
  std::vector<std::vector<int>> op_vars;     // y_0 = x, y_1..y_k
  std::vector<std::vector<Scalar>> codomain;  // spectral parameters of each operator's target
};

Layout layout(const std::vector<int>& profile, const std::vector<Scalar>& u) {
  int N = static_cast<int>(profile.size());
  if (static_cast<int>(u.size()) != N) throw std::invalid_argument("screened: parameter count differs from N");
  Layout L;
  std::vector<Scalar> cod = u;
  int op = 0;
  for (int b = 0; b < N; ++b)
    for (int rep = 0; rep < profile[b]; ++rep, ++op) {
      int k = b;
      L.type.push_back(k);
      L.codomain.push_back(cod);
      std::vector<int> vars;
      for (int i = 0; i <= k; ++i) {
        int v = L.V.size();
        L.V.weight.push_back(op);
        vars.push_back(v);
        L.currents.push_back(i == 0 ? phi0_current(N, v, op) : screening_current(N, i, v, op));
      }
      L.op_vars.push_back(vars);
      cod[k] = cod[k] / Scalar::t();
    }
  return L;
}

// monomial v_d^n / v_c^n
std::vector<int> ratio_mono(int nv, int c, int d, int n) {
  std::vector<int> e(nv, 0);
  e[d] += n;
  e[c] -= n;
  return e;
}

}  // namespace

Scalar screened_weight(const std::vector<int>& r, const std::vector<Scalar>& u) {
  int k = static_cast<int>(r.size());
  Scalar w(1), q = Scalar::q(), t = Scalar::t();
  for (int i = 1; i <= k; ++i) {
    if (r[i - 1] == 0) continue;
    Scalar ratio = u[i - 1] / u[k];
    w *= qpoch(t * ratio, r[i - 1]) / qpoch(q * ratio, r[i - 1]);
  }
  return w;
}

std::map<std::vector<int>, FockVector> vn_vacuum_image(const std::vector<int>& profile, const std::vector<Scalar>& u,
                                                       int level, int W) {
  int N = static_cast<int>(profile.size());
  Layout L = layout(profile, u);
  int nv = L.V.size();
  int nops = static_cast<int>(L.type.size());

  // contractions between currents of different operators
  LPoly S;
  for (auto& c : L.currents)
    for (auto& d : L.currents) {
      if (c.op >= d.op) continue;
      int gap = d.op - c.op;
      for (int n = 1; n * gap <= W; ++n) {
        Scalar k;
        for (int j = 0; j < N; ++j)
          if (!c.B[j].is_zero() && !d.A[j].is_zero()) k += c.B[j](n) * d.A[j](n);
        add_term(S, ratio_mono(nv, c.var, d.var, n), k * Scalar(n) * kappa(n));
      }
    }
  LPoly P = lp_exp(L.V, S, W);

  // creation coefficients C^(j)_n = sum_c A_c^(j)(n) v_c^n
  std::vector<std::vector<LPoly>> C(N, std::vector<LPoly>(level + 1));
  for (int j = 0; j < N; ++j)
    for (int n = 1; n <= level; ++n)
      for (auto& c : L.currents)
        if (!c.A[j].is_zero()) {
          std::vector<int> e(nv, 0);
          e[c.var] = n;
          add_term(C[j][n], e, c.A[j](n));
        }

  std::map<std::vector<int>, FockVector> out;
  for (auto& mu : ntuples(N, level)) {
    LPoly G = P;
    for (int j = 0; j < N; ++j) {
      std::map<int, int> mult;
      for (int x : mu[j].parts()) ++mult[x];
      for (auto [n, m] : mult) {
        LPoly pw = lp_constant(L.V, Scalar(1));
        for (int a = 0; a < m; ++a) pw = lp_mul(L.V, pw, C[j][n], W);
        Scalar fact(1);
        for (int a = 2; a <= m; ++a) fact *= Scalar(a);
        LPoly sc;
        for (auto& [e, x] : pw.c) add_term(sc, e, x / fact);
        G = lp_mul(L.V, G, sc, W);
      }
    }
    // constant term in the screening variables: y_i^{m_i} picks r_i = -(m_i + ... + m_k)
    for (auto& [e, x] : G.c) {
      std::vector<int> xe(nops, 0);
      Scalar coef = x;
      for (int a = 0; a < nops; ++a) {
        const auto& vars = L.op_vars[a];
        int k = L.type[a];
        std::vector<int> r(k);
        int tail = 0;
        for (int i = k; i >= 1; --i) {
          tail += e[vars[i]];
          r[i - 1] = -tail;
        }
        xe[a] = tail + e[vars[0]];
        if (k) coef *= screened_weight(r, L.codomain[a]);
      }
      auto it = out.find(xe);
      if (it == out.end()) it = out.emplace(xe, FockVector(Side::ket, N)).first;
      it->second.add(mu, coef);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

FockVector screened_vacuum_image(int N, int k, const std::vector<Scalar>& u, int level) {
  std::vector<int> profile(N, 0);
  profile.at(k) = 1;
  auto img = vn_vacuum_image(profile, u, level, 0);
  auto it = img.find({level});
  return it == img.end() ? FockVector(Side::ket, N) : it->second;
}

Scalar screened_matrix_element(const FockVector& bra, int k, const std::vector<Scalar>& u) {
  Scalar r;
  for (auto& [lev, part] : bra.by_level()) r += fock_pairing(part, screened_vacuum_image(bra.N, k, u, lev));
  return r;
}

namespace {

int flat_weight(const std::vector<int>& flat) {
  int w = 0;
  for (size_t j = 0; j < flat.size(); ++j) w += static_cast<int>(j) * flat[j];
  return w;
}

// exponents of z in x^{beta}, sum beta = 0: E_k = sum_{j>k} beta_j
std::vector<int> z_of(const std::vector<int>& beta) {
  std::vector<int> E(beta.size() - 1, 0);
  int run = 0;
  for (size_t j = beta.size() - 1; j >= 1; --j) {
    run += beta[j];
    E[j - 1] = run;
  }
  return E;
}

}  // namespace

FockVector genmac_via_screened(const NTuple& l, const std::vector<int>& profile, const std::vector<Scalar>& u) {
  int N = static_cast<int>(profile.size());
  std::vector<int> flat = flatten(l, profile);
  int n = static_cast<int>(flat.size());
  int L = total_size(l);
  FockVector out(Side::ket, N);
  if (n == 0) return L == 0 ? FockVector::vacuum(Side::ket, N) : out;
  int W = flat_weight(flat);
  auto img = vn_vacuum_image(profile, u, L, W);
  RatioSeries f = fn_series(n, specialized_s(l, profile, u), W, Scalar::q(), Scalar::q() / Scalar::t());
  for (auto& [alpha, vec] : img) {
    std::vector<int> beta(n);
    for (int j = 0; j < n; ++j) beta[j] = alpha[j] - flat[j];
    std::vector<int> E = z_of(beta);
    bool ok = true;
    for (auto& x : E) {
      x = -x;
      if (x < 0) ok = false;
    }
    if (!ok) continue;
    Scalar c = f.coeff(E);
    if (!c.is_zero()) out = out + vec.scaled(c);
  }
  return out;
}

RatioSeries screened_P_series(const NTuple& l, const std::vector<int>& profile, const std::vector<Scalar>& u, int D) {
  int N = static_cast<int>(profile.size());
  std::vector<int> flat = flatten(l, profile);
  int n = static_cast<int>(flat.size());
  RatioSeries out(n, D);
  auto img = vn_vacuum_image(profile, u, total_size(l), flat_weight(flat) + D);
  GenMac G(N, u);
  const FockVector& P = G.P_state(l, Side::bra).vector;
  for (auto& [alpha, vec] : img) {
    std::vector<int> beta(n);
    for (int j = 0; j < n; ++j) beta[j] = alpha[j] - flat[j];
    std::vector<int> E = n > 1 ? z_of(beta) : std::vector<int>{};
    Scalar c = fock_pairing(P, vec);
    if (c.is_zero()) continue;
    for (int x : E)
      if (x < 0) throw std::logic_error("screened_P_series: term outside the ratio series");
    out.add(E, c);
  }
  return out;
}

Scalar R_coefficient(const NTuple& l, const std::vector<int>& profile, const std::vector<Scalar>& u) {
  int N = static_cast<int>(profile.size());
  int g = 0;
  for (int i = 1; i <= N; ++i) g += (i - 1) * l[i - 1].size();
  Scalar r = gamma_pow(g), q = Scalar::q(), t = Scalar::t();
  for (int k = 2; k <= N; ++k) {
    std::vector<int> parts = l[k - 1].parts();
    for (int i = 1; i <= profile[k - 1]; ++i) {
      int li = i <= static_cast<int>(parts.size()) ? parts[i - 1] : 0;
      if (li == 0) continue;
      for (int m = 1; m < k; ++m) {
        Scalar ratio = u[m - 1] / u[k - 1];
        r *= qpoch(t.pow(i - profile[m - 1]) * ratio, -li) / qpoch(q * t.pow(i - 1 - profile[m - 1]) * ratio, -li);
      }
    }
  }
  return r;
}

std::vector<Scalar> resonant_params(int N, int k, int r, int s) {
  std::vector<Scalar> u;
  for (int i = 1; i <= N; ++i) u.push_back(Scalar::u(i));
  u.at(k - 1) = Scalar::qt(s, -r) * u.at(k);
  return u;
}

FockVector singular_vector(int N, int k, int r, int s) {
  if (k < 1 || k >= N) throw std::invalid_argument("singular_vector: need 1 <= k < N");
  SymFunc P = macdonald_P(Partition(std::vector<int>(r, s)));
  FockVector out(Side::ket, N);
  for (auto& [nu, c] : P.terms) {
    // expand prod_i alpha_{-nu_i} over the two slots
    std::vector<int> parts = nu.parts();
    size_t m = parts.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> lo, hi;
      Scalar coef = c;
      for (size_t i = 0; i < m; ++i) {
        int n = parts[i];
        coef *= gamma_pow(k * n);
        if (mask >> i & 1) {
          hi.push_back(n);
        } else {
          lo.push_back(n);
          coef *= -gamma_pow(n);
        }
      }
      std::sort(lo.rbegin(), lo.rend());
      std::sort(hi.rbegin(), hi.rend());
      NTuple label(N);
      label[k - 1] = Partition(lo);
      label[k] = Partition(hi);
      out.add(label, coef);
    }
  }
  return out;
}

}  // namespace mukade
