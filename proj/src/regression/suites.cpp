#include <random>

#include "mukade/genmac.hpp"
#include "mukade/hyperseries.hpp"
#include "mukade/nekrasov.hpp"
#include "mukade/regression.hpp"
#include "mukade/screened.hpp"
#include "regression/common.hpp"

namespace mukade {

using namespace detail;

namespace {

std::string N_str(int N) { return "N=" + std::to_string(N); }

std::string profile_str(const std::vector<int>& p) {
  std::string s = "n=(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// compositions of total into N nonnegative parts
std::vector<std::vector<int>> profiles(int N, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(N, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == N - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, total);
  return out;
}

bool fits(const NTuple& l, const std::vector<int>& profile) {
  for (size_t i = 0; i < l.size(); ++i)
    if (l[i].length() > profile[i]) return false;
  return true;
}

std::vector<Scalar> sps(int n) {
  std::vector<Scalar> s;
  for (int i = 1; i <= n; ++i) s.push_back(Scalar::var(Symbols::sp(i)));
  return s;
}

Scalar named(const std::string& n) { return Scalar::var(Symbols::require(n)); }

Scalar random_scalar(std::mt19937& g) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2), k(1, 3);
  auto poly = [&]() {
    Scalar r;
    int terms = k(g);
    for (int i = 0; i < terms; ++i)
      r += Scalar(c(g)) * Scalar::p().pow(e(g)) * Scalar::s().pow(e(g)) * Scalar::u(1).pow(e(g));
    return r;
  };
  Scalar d = poly();
  while (d.is_zero()) d = poly();
  return poly() / d;
}

std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> r;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions(k)) r.push_back(p);
  return r;
}

// b_l(q) b'_l(1/t) over the multiplicities of l
Scalar bb(const Partition& l) {
  Scalar r(1);
  for (int m : l.multiplicities())
    for (int k = 1; k <= m; ++k) r *= (1 - Scalar::qt(k, 0)) * (-1 + Scalar::qt(0, -k));
  return r;
}

}  // namespace

SuiteReport norms_suite(const SuiteConfig& c) {
  SuiteReport rep{"norms", {}, 0};
  Timer timer(rep);
  for (int N = 1; N <= c.max_N; ++N) {
    int bound = c.level >= 0 ? c.level : (N == 1 ? 3 : 2);
    GenMac g(N, us(N));
    for (int n = 0; n <= bound; ++n) {
      const auto L = ntuples(N, n);
      Check pp{N_str(N) + " level " + std::to_string(n) + " <P|P> = delta prod c'/c", true, ""};
      Check pq{N_str(N) + " level " + std::to_string(n) + " <P|Q> = delta", true, ""};
      for (auto& a : L)
        for (auto& b : L) {
          const auto& bra = g.P_state(a, Side::bra).vector;
          Scalar expect;
          if (a == b) {
            expect = Scalar(1);
            for (auto& p : a) expect *= cprime_lambda(p) / c_lambda(p);
          }
          if (!scalar_equal(fock_pairing(bra, g.P_state(b, Side::ket).vector), expect, c.probabilistic)) {
            pp.ok = false;
            pp.detail += ntuple_str(a) + ntuple_str(b) + " ";
          }
          if (!scalar_equal(fock_pairing(bra, g.Q_state(b)), Scalar(a == b ? 1 : 0), c.probabilistic)) {
            pq.ok = false;
            pq.detail += ntuple_str(a) + ntuple_str(b) + " ";
          }
        }
      rep.checks.push_back(std::move(pp));
      rep.checks.push_back(std::move(pq));
      for (auto& l : L) rep.checks.push_back({N_str(N) + " <K" + ntuple_str(l) + "|K> closed form", g.norm_check(l), ""});
    }
  }
  return rep;
}

SuiteReport kac_suite(const SuiteConfig& c) {
  SuiteReport rep{"kac", {}, 0};
  Timer timer(rep);
  int bound = c.level >= 0 ? c.level : 3;
  for (int n = 1; n <= bound; ++n) {
    Scalar expect(1);
    int ell = 0;
    for (auto& l : partitions(n)) {
      expect *= bb(l);
      ell += l.length();
    }
    expect *= Scalar::u(1).pow(2 * ell);
    Scalar det = kac_determinant(1, n, us(1));
    Check ch{"N=1 level " + std::to_string(n) + " full determinant", scalar_equal(det, expect, c.probabilistic), ""};
    if (!ch.ok) ch.detail = "computed " + det.str();
    rep.checks.push_back(std::move(ch));
  }
  for (int N = 1; N <= std::min(c.max_N, 2); ++N)
    for (int n = 1; n <= bound; ++n) {
      auto u = us(N);
      Scalar quotient = kac_determinant(N, n, u) / kac_u_factor(N, n, u);
      bool free = true;
      for (int i = 1; i <= N; ++i) free = free && !quotient.depends_on(Symbols::u(i));
      Scalar g(1);
      for (auto& l : ntuples(N, n))
        for (auto& part : l) g *= bb(part);
      rep.checks.push_back({N_str(N) + " level " + std::to_string(n) + " u-dependent factor", free, ""});
      Check ch{N_str(N) + " level " + std::to_string(n) + " remaining factor is prod b b'",
               scalar_equal(quotient, g, c.probabilistic), ""};
      if (!ch.ok) ch.detail = "quotient " + quotient.str();
      rep.checks.push_back(std::move(ch));
    }
  return rep;
}

SuiteReport singular_suite(const SuiteConfig& c) {
  SuiteReport rep{"singular", {}, 0};
  Timer timer(rep);
  std::vector<std::pair<int, int>> rs = {{1, 1}, {1, 2}, {2, 1}};
  for (auto [r, s] : rs) {
    if (c.level >= 0 && r * s > c.level) continue;
    std::string name = "N=2 chi(1)_{" + std::to_string(r) + "," + std::to_string(s) + "}";
    FockVector chi = singular_vector(2, 1, r, s);
    rep.checks.push_back({name + " nonzero", !chi.is_zero(), ""});
    FockSpace F(2, resonant_params(2, 1, r, s));
    Check ch{name + " annihilated by X(i)_m, m <= " + std::to_string(r * s + 1), true, ""};
    for (int i = 1; i <= 2; ++i)
      for (int m = 1; m <= r * s + 1; ++m)
        if (!apply_mode(F.X(i), m, chi).is_zero()) {
          ch.ok = false;
          ch.detail += "i=" + std::to_string(i) + " m=" + std::to_string(m) + " ";
        }
    rep.checks.push_back(std::move(ch));
  }
  return rep;
}

SuiteReport screened_suite(const SuiteConfig& c) {
  SuiteReport rep{"screened", {}, 0};
  Timer timer(rep);
  int bound = c.level >= 0 ? c.level : 2;
  for (int N = 1; N <= std::min(c.max_N, 2); ++N) {
    auto u = us(N);
    GenMac g(N, u);
    for (int size = 1; size <= 2; ++size)
      for (auto& prof : profiles(N, size))
        for (int L = 0; L <= bound; ++L)
          for (auto& l : ntuples(N, L)) {
            if (!fits(l, prof)) continue;
            std::string name = N_str(N) + " " + profile_str(prof) + " " + ntuple_str(l);
            Scalar R = R_coefficient(l, prof, u);
            FockVector lhs = genmac_via_screened(l, prof, u);
            FockVector rhs = g.Q_state(l).scaled(R);
            rep.checks.push_back({name + " screened state = R Q", lhs == rhs, ""});
            RatioSeries ps = screened_P_series(l, prof, u, 2);
            int n = size;
            RatioSeries expect = pn_series(n, specialized_s(l, prof, u), 2, Scalar::q(), Scalar::q() / Scalar::t());
            rep.checks.push_back({name + " <P|V|0> = R p_n to degree 2", ps == expect.scaled(R), ""});
          }
  }
  return rep;
}

SuiteReport hyper_suite(const SuiteConfig& c) {
  SuiteReport rep{"hyper", {}, 0};
  Timer timer(rep);
  int D = c.level >= 0 ? c.level : 3;
  Scalar q = Scalar::q(), t = Scalar::t();
  for (int n = 1; n <= 4; ++n) {
    auto s = sps(n);
    Scalar e1;
    for (auto& x : s) e1 += x;
    auto p = pn_series(n, s, D, q, t);
    rep.checks.push_back({"D p_n = e_1(s) p_n, n=" + std::to_string(n) + " degree " + std::to_string(D),
                          apply_D1(DOperator::forward, s, q, t, p) == p.scaled(e1), ""});
    auto f = fn_series(n, s, D, q, t);
    rep.checks.push_back({"tilde D f_n = e_1(s) f_n, n=" + std::to_string(n) + " degree " + std::to_string(D),
                          apply_D1(DOperator::tilde, s, q, t, f) == f.scaled(e1), ""});
  }
  for (int n = 2; n <= 3; ++n) {
    auto s = sps(n);
    auto rhs = pn_series(n, s, D, q, q / t);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) rhs = rhs * infinite_ratio_factor(n, D, i, j, t, q / t, q);
    rep.checks.push_back({"p_n(t) = prod (t x_j/x_i)/(q x_j/(t x_i)) p_n(q/t), n=" + std::to_string(n),
                          pn_series(n, s, D, q, t) == rhs, ""});
  }
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      std::vector<Scalar> a, x, b, y;
      for (int i = 1; i <= m; ++i) {
        a.push_back(named("a" + std::to_string(i)));
        x.push_back(named("x" + std::to_string(i)));
      }
      for (int k = 1; k <= n; ++k) {
        b.push_back(named("b" + std::to_string(k)));
        y.push_back(named("y" + std::to_string(k)));
      }
      auto lhs = kn_phi(a, x, b, named("c"), y, D);
      auto rhs = kn_euler_rhs(a, x, b, named("c"), y, D);
      for (int d = 0; d <= D; ++d)
        rep.checks.push_back({"Euler transformation m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                  " u-degree " + std::to_string(d),
                              scalar_equal(lhs[d], rhs[d], c.probabilistic), ""});
    }
  int dual_levels = c.level >= 0 ? std::min(c.level, 2) : 2;
  for (int N = 1; N <= 3; ++N) {
    auto u = us(N);
    for (int size = 1; size <= 3; ++size)
      for (auto& prof : profiles(N, size)) {
        Check ch{"duality " + profile_str(prof) + " levels <= " + std::to_string(dual_levels), true, ""};
        int pairs = 0;
        for (int a = 0; a <= dual_levels; ++a)
          for (int b = 0; b <= dual_levels; ++b)
            for (auto& l : ntuples(N, a))
              for (auto& m : ntuples(N, b)) {
                if (!fits(l, prof) || !fits(m, prof)) continue;
                ++pairs;
                if (!scalar_equal(duality_pairing(l, m, prof, u), Scalar(l == m ? 1 : 0), c.probabilistic)) {
                  ch.ok = false;
                  ch.detail += ntuple_str(l) + ntuple_str(m) + " ";
                }
              }
        ch.name += " (" + std::to_string(pairs) + " pairs)";
        rep.checks.push_back(std::move(ch));
      }
  }
  return rep;
}

SuiteReport hyper_numeric_suite(const SuiteConfig& c) {
  SuiteReport rep{"hyper-numeric", {}, 0};
  Timer timer(rep);
  if (c.level == 0) return rep;
  struct Sample {
    double q, t;
  };
  // |q| < 1 and |t| > |q|^{-(n-2)} for every n used below
  const std::vector<Sample> samples = {{0.2, 6.0}, {0.1, 12.0}, {0.3, 4.0}};
  auto record = [&](const NumericCheck& r, const std::string& label) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "deviation %.3g at order %d", r.deviation, r.order);
    rep.checks.push_back({r.name + " " + label, r.ok, buf});
  };
  for (auto& sm : samples) {
    std::string label = "q=" + std::to_string(sm.q).substr(0, 4) + " t=" + std::to_string(sm.t).substr(0, 5);
    record(transform_check(2, 0, sm.q, sm.t, {0.7, 1.9}, 1, {}), label);
    record(transform_check(3, 0, sm.q, sm.t, {0.7, 1.9, 1.3}, 1, {}), label);
    record(transform_check(1, 1, sm.q, sm.t, {0.7, 1.9}, 1, {0.05}), label);
    record(transform_check(2, 1, sm.q, sm.t, {0.7, 1.9, 1.3}, 1, {0.05}), label);
  }
  return rep;
}

SuiteReport property_suite(const SuiteConfig& c) {
  SuiteReport rep{"properties", {}, 0};
  Timer timer(rep);
  int bound = c.level >= 0 ? c.level : 3;
  {
    std::mt19937 g(11);
    Check ch{"field axioms on 25 random triples", true, ""};
    for (int k = 0; k < 25; ++k) {
      Scalar a = random_scalar(g), b = random_scalar(g), d = random_scalar(g);
      bool ok = (a + b) + d == a + (b + d) && (a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d &&
                a + b == b + a && a * b == b * a && (a - a).is_zero() && (a.is_zero() || a * a.inverse() == Scalar(1));
      if (!ok) {
        ch.ok = false;
        ch.detail += a.str() + "; ";
      }
    }
    rep.checks.push_back(std::move(ch));
  }
  {
    std::mt19937 g(7);
    Check ch{"(a;q)_{m+1} = (a;q)_m (1 - q^m a), -3 <= m <= 3", true, ""};
    for (int k = 0; k < 6; ++k) {
      Scalar a = random_scalar(g);
      for (int m = -3; m <= 3; ++m) {
        Scalar lhs, rhs;
        try {
          lhs = qpoch(a, m + 1);
          rhs = qpoch(a, m) * (1 - Scalar::q().pow(m) * a);
        } catch (const std::domain_error&) {
          continue;
        }
        if (lhs != rhs) {
          ch.ok = false;
          ch.detail += "m=" + std::to_string(m) + " ";
        }
      }
    }
    rep.checks.push_back(std::move(ch));
  }
  auto parts = partitions_upto(bound);
  {
    Scalar x = Scalar::u(1), gi = Scalar::gamma().inverse();
    Check ch{"Nekrasov reflection, |l|,|m| <= " + std::to_string(bound), true, ""};
    for (auto& l : parts)
      for (auto& m : parts) {
        Scalar lhs = nekrasov(l, m, gi * x);
        Scalar rhs = nekrasov(m, l, gi * x.inverse()) * x.pow(l.size() + m.size()) * flaming_factors(l).f /
                     flaming_factors(m).f;
        if (!scalar_equal(lhs, rhs, c.probabilistic)) {
          ch.ok = false;
          ch.detail += l.str() + "," + m.str() + " ";
        }
      }
    rep.checks.push_back(std::move(ch));
  }
  {
    Check ch{"c_l c'_l = (-1)^|l| q^{n(l')+|l|} t^{n(l)} N_ll(1), |l| <= " + std::to_string(bound + 1), true, ""};
    for (auto& l : partitions_upto(bound + 1)) {
      Scalar sign(l.size() % 2 ? -1 : 1);
      if (!scalar_equal(c_lambda(l) * cprime_lambda(l),
                        sign * Scalar::qt(l.conjugate().n() + l.size(), l.n()) * nekrasov(l, l, Scalar(1)),
                        c.probabilistic)) {
        ch.ok = false;
        ch.detail += l.str() + " ";
      }
    }
    rep.checks.push_back(std::move(ch));
  }
  {
    Check ch{"N_lm(q^n t^m) = 0 truth table, |l|,|m| <= " + std::to_string(bound) + ", |n|,|m| <= 2", true, ""};
    int checked = 0;
    for (auto& l : parts)
      for (auto& m : parts)
        for (int n = -2; n <= 2; ++n)
          for (int mm = -2; mm <= 2; ++mm) {
            bool b1 = mm >= 0 && n <= 0, b2 = mm <= -1 && n >= 1;
            if (!b1 && !b2) continue;
            ++checked;
            if (nekrasov(l, m, Scalar::qt(n, mm)).is_zero() != nekrasov_vanishes(l, m, n, mm)) {
              ch.ok = false;
              ch.detail += l.str() + "," + m.str() + " n=" + std::to_string(n) + " m=" + std::to_string(mm) + " ";
            }
          }
    ch.name += " (" + std::to_string(checked) + " cases)";
    rep.checks.push_back(std::move(ch));
  }
  SuiteConfig rc = c;
  if (c.level < 0) rc.level = 2;
  for (auto& ch : reduction_order_suite(rc).checks) rep.checks.push_back(ch);
  return rep;
}

}  // namespace mukade
