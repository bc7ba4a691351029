// Multivariate gcd over Z: Brown's dense modular algorithm, one variable at a
// time by evaluation and Newton interpolation, lifted by CRT and confirmed by
// exact trial division. Callers never depend on the gcd for correctness; on
// failure the trivial gcd is returned.

#include <algorithm>
#include <optional>
#include <random>
#include <unordered_map>

#include "mukade/poly.hpp"
#include "modp.hpp"

namespace mukade {

namespace {

using u64 = uint64_t;
using detail::Fp;
using detail::PolyP;
using detail::TermP;
using UP = std::vector<u64>;  // dense univariate, ascending

void trim(UP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UP umod(UP a, const UP& b, const Fp& F) {
  trim(a);
  u64 inv = F.inv(b.back());
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    u64 f = F.mul(a.back(), inv);
    int sh = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) a[sh + i] = F.sub(a[sh + i], F.mul(f, b[i]));
    trim(a);
  }
  return a;
}

UP ugcd(UP a, UP b, const Fp& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UP r = umod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  u64 inv = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, inv);
  return a;
}

u64 ueval(const UP& a, u64 x, const Fp& F) {
  u64 r = 0;
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

// coefficient groups of P viewed in Zp[others][y], each as a dense poly in y
std::vector<UP> y_groups(const PolyP& P, int y) {
  std::vector<UP> out;
  const TermP* prev = nullptr;
  for (auto& t : P.t) {
    Mono key = t.m;
    key[y] = 0;
    bool same = false;
    if (prev) {
      Mono pk = prev->m;
      pk[y] = 0;
      same = pk == key;
    }
    if (!same) out.emplace_back();
    UP& g = out.back();
    int d = t.m[y];
    if (static_cast<int>(g.size()) <= d) g.resize(d + 1, 0);
    g[d] = t.c;
    prev = &t;
  }
  return out;
}

UP y_content(const PolyP& P, int y, const Fp& F) {
  UP g;
  for (auto& grp : y_groups(P, y)) {
    g = ugcd(g, grp, F);
    if (g.size() == 1) break;
  }
  return g;
}

PolyP from_up(const UP& a, int y) {
  PolyP r;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i]) r.t.push_back({Mono::var(y, static_cast<int>(i)), a[i]});
  return r;
}

UP to_up(const PolyP& P, int y) {
  UP r;
  for (auto& t : P.t) {
    int d = t.m[y];
    if (static_cast<int>(r.size()) <= d) r.resize(d + 1, 0);
    r[d] = t.c;
  }
  return r;
}

// evaluate variable y at b; y is the last present variable so the order is kept
PolyP eval_last(const PolyP& P, int y, u64 b, const Fp& F) {
  PolyP r;
  for (auto& t : P.t) {
    Mono k = t.m;
    int d = k[y];
    k[y] = 0;
    u64 c = F.mul(t.c, F.pow(b, d));
    if (!r.t.empty() && r.t.back().m == k) {
      r.t.back().c = F.add(r.t.back().c, c);
    } else {
      r.t.push_back({k, c});
    }
  }
  PolyP out;
  for (auto& t : r.t)
    if (t.c) out.t.push_back(t);
  return out;
}

Mono strip(Mono m, int y) {
  m[y] = 0;
  return m;
}

std::mt19937_64& rng() {
  thread_local std::mt19937_64 g(0x5eed1234abcdULL);
  return g;
}

std::optional<PolyP> gcdp(PolyP A, PolyP B, std::vector<int> vars, const Fp& F);

std::optional<PolyP> gcd_free_of(const PolyP& A, const PolyP& B, int y, std::vector<int> xs,
                                 const Fp& F) {
  // A contains y, B does not: gcd(B, every y-coefficient of A)
  PolyP g = B;
  PolyP cur;
  auto flush = [&]() -> bool {
    if (cur.t.empty()) return true;
    auto r = gcdp(g, cur, xs, F);
    if (!r) return false;
    g = *r;
    cur.t.clear();
    return true;
  };
  // collect coefficient of each power of y
  std::unordered_map<int, std::vector<TermP>> by_deg;
  for (auto& t : A.t) by_deg[t.m[y]].push_back({strip(t.m, y), t.c});
  for (auto& kv : by_deg) {
    cur.t = kv.second;  // stays sorted: stripping the last variable keeps order
    if (!flush()) return std::nullopt;
    if (g.is_constant()) return PolyP::one();
  }
  return g.monic(F);
}

std::optional<PolyP> gcdp(PolyP A, PolyP B, std::vector<int> vars, const Fp& F) {
  if (A.t.empty()) return B.monic(F);
  if (B.t.empty()) return A.monic(F);
  // keep only variables present
  uint64_t ma = A.var_mask(), mb = B.var_mask();
  std::vector<int> present;
  for (int v : vars)
    if (((ma | mb) >> v) & 1) present.push_back(v);
  vars = present;
  if (vars.empty()) return PolyP::one();
  if (A.t.size() == 1 || B.t.size() == 1) {
    // gcd with a monomial is a monomial
    const PolyP& M = A.t.size() == 1 ? A : B;
    const PolyP& O = A.t.size() == 1 ? B : A;
    Mono m = M.t[0].m;
    for (auto& t : O.t) m = Mono::min(m, t.m);
    PolyP r;
    r.t.push_back({m, 1});
    return r;
  }
  int y = vars.back();
  std::vector<int> xs(vars.begin(), vars.end() - 1);
  if (vars.size() == 1) {
    UP g = ugcd(to_up(A, y), to_up(B, y), F);
    return from_up(g, y);
  }
  bool ay = (ma >> y) & 1, by = (mb >> y) & 1;
  if (ay && !by) return gcd_free_of(A, B, y, xs, F);
  if (by && !ay) return gcd_free_of(B, A, y, xs, F);

  UP cA = y_content(A, y, F), cB = y_content(B, y, F);
  UP c = ugcd(cA, cB, F);
  if (cA.size() > 1) A = A.div_exact(from_up(cA, y), F);
  if (cB.size() > 1) B = B.div_exact(from_up(cB, y), F);
  UP lA = y_groups(A, y).front(), lB = y_groups(B, y).front();
  UP g = ugcd(lA, lB, F);
  int degA = 0, degB = 0;
  for (auto& t : A.t) degA = std::max<int>(degA, t.m[y]);
  for (auto& t : B.t) degB = std::max<int>(degB, t.m[y]);
  int bound = static_cast<int>(g.size()) - 1 + std::min(degA, degB) + 1;

  PolyP H;
  bool haveH = false;
  UP M = {1};
  int count = 0, tries = 0;
  while (tries < 4 * bound + 40) {
    ++tries;
    u64 b = rng()() % F.p;
    if (ueval(lA, b, F) == 0 || ueval(lB, b, F) == 0) continue;
    PolyP Ab = eval_last(A, y, b, F), Bb = eval_last(B, y, b, F);
    auto Cb = gcdp(Ab, Bb, xs, F);
    if (!Cb) return std::nullopt;
    if (Cb->is_constant()) return from_up(c, y);
    u64 gb = ueval(g, b, F);
    PolyP Cs = Cb->scale(gb, F);
    bool test = false;
    if (haveH) {
      int cmp = lex_cmp(Cs.t[0].m, strip(H.t[0].m, y));
      if (cmp < 0) {
        haveH = false;  // earlier points were unlucky
      } else if (cmp > 0) {
        continue;
      }
    }
    if (!haveH) {
      H = Cs;
      haveH = true;
      M = {F.neg(b), 1};
      count = 1;
    } else {
      PolyP Hb = eval_last(H, y, b, F);
      PolyP diff = Cs.sub(Hb, F);
      if (diff.t.empty()) {
        test = true;
      } else {
        u64 mb_inv = F.inv(ueval(M, b, F));
        H = H.add(diff.scale(mb_inv, F).mul(from_up(M, y), F), F);
      }
      UP M2(M.size() + 1, 0);
      for (size_t i = 0; i < M.size(); ++i) {
        M2[i + 1] = F.add(M2[i + 1], M[i]);
        M2[i] = F.sub(M2[i], F.mul(b, M[i]));
      }
      M = std::move(M2);
      ++count;
    }
    if (test || count > bound) {
      UP hc = y_content(H, y, F);
      PolyP cand = hc.size() > 1 ? H.div_exact(from_up(hc, y), F) : H;
      PolyP q;
      if (A.try_div(cand, F, &q) && B.try_div(cand, F, &q)) {
        PolyP r = cand.mul(from_up(c, y), F);
        return r.monic(F);
      }
    }
  }
  return std::nullopt;
}

const std::vector<u64>& primes() {
  static const std::vector<u64> ps = [] {
    std::vector<u64> v;
    mpz_class c = (mpz_class(1) << 62) - 12345;
    for (int i = 0; i < 24; ++i) {
      c -= 2;
      while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0) c -= 2;
      v.push_back(c.get_ui());
    }
    return v;
  }();
  return ps;
}

mpz_class to_mpz(u64 x) { return mpz_class(static_cast<unsigned long>(x)); }

}  // namespace

Poly gcd(const Poly& A0, const Poly& B0) {
  if (A0.is_zero() && B0.is_zero()) return Poly();
  if (A0.is_zero()) return B0.lead().c < 0 ? -B0 : B0;
  if (B0.is_zero()) return A0.lead().c < 0 ? -A0 : A0;
  mpz_class ca = A0.content(), cb = B0.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Mono ma = A0.min_mono(), mb = B0.min_mono();
  Mono mg = Mono::min(ma, mb);
  Poly base(cg, mg);
  if (A0.is_monomial() || B0.is_monomial()) return base;
  Poly A = A0.mul_term(1, Mono{} / ma).divexact_int(ca);
  Poly B = B0.mul_term(1, Mono{} / mb).divexact_int(cb);
  if (A.lead().c < 0) A = -A;
  if (B.lead().c < 0) B = -B;
  if (A == B) return base * A;
  {
    Poly q;
    if (A.size() <= B.size() && Poly::divide(B, A, &q)) return base * A;
    if (B.size() < A.size() && Poly::divide(A, B, &q)) return base * B;
  }

  std::vector<int> vars;
  uint64_t mask = A.var_mask() | B.var_mask();
  for (int i = 0; i < kMaxVars; ++i)
    if ((mask >> i) & 1) vars.push_back(i);
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), A.lead().c.get_mpz_t(), B.lead().c.get_mpz_t());

  Poly acc;  // CRT accumulator
  mpz_class modulus = 1;
  Mono lead;
  bool have = false;
  for (u64 p : primes()) {
    if (mpz_divisible_ui_p(A.lead().c.get_mpz_t(), p) || mpz_divisible_ui_p(B.lead().c.get_mpz_t(), p))
      continue;
    Fp F(p);
    auto G = gcdp(PolyP::from(A, F), PolyP::from(B, F), vars, F);
    if (!G) continue;
    if (G->is_constant()) return base;
    PolyP Gs = G->scale(mpz_fdiv_ui(gamma.get_mpz_t(), p), F);
    if (have) {
      int cmp = lex_cmp(Gs.t[0].m, lead);
      if (cmp > 0) continue;
      if (cmp < 0) have = false;
    }
    if (!have) {
      std::vector<Term> ts;
      for (auto& t : Gs.t) ts.push_back({t.m, to_mpz(t.c)});
      acc = Poly::from_terms(std::move(ts));
      modulus = to_mpz(p);
      lead = Gs.t[0].m;
      have = true;
    } else {
      // combine acc (mod modulus) with Gs (mod p) on the union of supports
      mpz_class mp(std::to_string(p));
      mpz_class inv;
      mpz_class mm = modulus % mp;
      mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), mp.get_mpz_t());
      std::unordered_map<Mono, u64, MonoHash> gm;
      for (auto& t : Gs.t) gm[t.m] = t.c;
      std::vector<Term> ts;
      for (auto& t : acc.terms()) {
        u64 gv = 0;
        auto it = gm.find(t.m);
        if (it != gm.end()) {
          gv = it->second;
          gm.erase(it);
        }
        mpz_class a = t.c;
        mpz_class d = (to_mpz(gv) - a) % mp;
        if (d < 0) d += mp;
        d = (d * inv) % mp;
        ts.push_back({t.m, a + modulus * d});
      }
      for (auto& kv : gm) {
        mpz_class d = (to_mpz(kv.second) * inv) % mp;
        ts.push_back({kv.first, modulus * d});
      }
      modulus *= mp;
      acc = Poly::from_terms(std::move(ts));
    }
    // symmetric lift
    mpz_class half = modulus / 2;
    std::vector<Term> ts;
    for (auto& t : acc.terms()) {
      mpz_class c = t.c % modulus;
      if (c < 0) c += modulus;
      if (c > half) c -= modulus;
      ts.push_back({t.m, c});
    }
    Poly cand = Poly::from_terms(std::move(ts));
    if (cand.is_zero()) continue;
    cand = cand.divexact_int(cand.content());
    if (cand.lead().c < 0) cand = -cand;
    Poly q;
    if (Poly::divide(A, cand, &q) && Poly::divide(B, cand, &q)) return base * cand;
  }
  return base;
}

}  // namespace mukade
