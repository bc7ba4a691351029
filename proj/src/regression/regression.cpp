#include "mukade/regression.hpp"

#include <algorithm>
#include <sstream>

#include "mukade/genmac.hpp"
#include "mukade/mukade.hpp"
#include "mukade/nekrasov.hpp"
#include "regression/common.hpp"

namespace mukade {

bool SuiteReport::ok() const { return failures() == 0; }

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
}

using namespace detail;

namespace {

Scalar evaluate(const MukadeTable& T, const std::vector<ElementTerm>& terms) {
  Scalar s;
  for (auto& t : terms) s += t.constant ? t.coeff : t.coeff * T.element(t.bra, t.ket);
  return s;
}

std::string pair_name(const NTuple& l, const NTuple& m) { return "<" + ntuple_str(l) + "|V|" + ntuple_str(m) + ">"; }

}  // namespace

SuiteReport alpha_suite(const SuiteConfig& c) {
  SuiteReport rep{"alpha", {}, 0};
  Timer timer(rep);
  for (auto& t : load_alpha_fixtures(c.fixtures)) {
    GenMac g(t.N, us(t.N));
    Check ch{t.name + " (" + t.source + ")", true, ""};
    int rows = 0;
    for (size_t r = 0; r < t.rows.size(); ++r) {
      int lev = total_size(t.rows[r]);
      if (c.level >= 0 && lev > c.level) continue;
      ++rows;
      Vec row = g.alpha_row(t.rows[r], t.sign);
      const auto& L = g.fock().labels(lev);
      for (size_t k = 0; k < t.cols.size(); ++k) {
        Scalar got;
        if (total_size(t.cols[k]) == lev) got = row[std::find(L.begin(), L.end(), t.cols[k]) - L.begin()];
        if (!scalar_equal(got, t.entries[r][k], c.probabilistic)) {
          ch.ok = false;
          ch.detail += "row " + ntuple_str(t.rows[r]) + " col " + ntuple_str(t.cols[k]) + ": computed " + got.str() +
                       ", printed " + t.text[r][k] + "; ";
        }
      }
    }
    if (rows) rep.checks.push_back(std::move(ch));
  }
  return rep;
}

SuiteReport element_suite(const SuiteConfig& c) {
  SuiteReport rep{"elements", {}, 0};
  Timer timer(rep);
  for (auto& f : load_element_fixtures(c.fixtures)) {
    if (f.N > std::max(c.max_N, 3)) continue;
    FockSpace ket_space(f.N, us(f.N)), bra_space(f.N, vs(f.N));
    for (auto& a : f.actions) {
      if (c.level >= 0 && total_size(a.state) > c.level) continue;
      const FockSpace& F = a.ket ? ket_space : bra_space;
      Side side = a.ket ? Side::ket : Side::bra;
      FockVector got = apply_mode(F.X(a.i), a.n, F.pbw_state(a.state, side));
      FockVector want(side, f.N);
      for (auto& [coef, lab] : a.result) want = want + F.pbw_state(lab, side).scaled(coef);
      std::ostringstream name;
      name << f.name << ": " << (a.ket ? "X^(" : "<X_" + ntuple_str(a.state) + "| X^(") << a.i << ")_" << a.n
           << (a.ket ? " |X_" + ntuple_str(a.state) + ">" : "");
      Check ch{name.str(), true, ""};
      FockVector diff = got - want;
      for (auto& [lab, coef] : diff.terms)
        if (!scalar_equal(coef, Scalar(), c.probabilistic)) {
          ch.ok = false;
          ch.detail = "differs on boson state " + ntuple_str(lab);
          break;
        }
      rep.checks.push_back(std::move(ch));
    }
    MukadeTable T(f.N, vs(f.N), us(f.N), Scalar::w(), 6);
    for (auto& e : f.elements) {
      if (c.level >= 0 && total_size(e.bra) + total_size(e.ket) > c.level) continue;
      Scalar lhs = e.K_basis ? T.K_element(e.bra, e.ket) : T.element(e.bra, e.ket);
      Check ch{f.name + ": " + e.name, scalar_equal(lhs, evaluate(T, e.rhs), c.probabilistic), ""};
      if (!ch.ok && !e.erratum.empty()) {
        ch.ok = scalar_equal(lhs, evaluate(T, e.erratum), c.probabilistic);
        ch.detail = std::string(ch.ok ? "holds with erratum: " : "fails even with erratum: ") + e.erratum_note;
      } else if (!ch.ok) {
        ch.detail = "computed " + lhs.str();
      }
      rep.checks.push_back(std::move(ch));
    }
  }
  return rep;
}

SuiteReport factorization_suite(const SuiteConfig& c) {
  SuiteReport rep{"factorization", {}, 0};
  Timer timer(rep);
  for (int N = 1; N <= c.max_N; ++N) {
    int bound = c.level >= 0 ? c.level : (N == 1 ? 4 : 2);
    MukadeTable T(N, vs(N), us(N), Scalar::w(), bound);
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; a + b <= bound; ++b)
        for (auto& l : ntuples(N, a))
          for (auto& m : ntuples(N, b)) {
            Scalar lhs = T.K_element(l, m);
            Scalar rhs = factorization_formula(l, m, vs(N), us(N), Scalar::w());
            Check ch{"N=" + std::to_string(N) + " <K" + ntuple_str(l) + "|V|K" + ntuple_str(m) + ">",
                     scalar_equal(lhs, rhs, c.probabilistic), ""};
            if (!ch.ok) ch.detail = "computed " + lhs.str() + ", formula " + rhs.str();
            rep.checks.push_back(std::move(ch));
          }
  }
  return rep;
}

SuiteReport reduction_order_suite(const SuiteConfig& c) {
  SuiteReport rep{"reduction-order", {}, 0};
  Timer timer(rep);
  int bound = c.level >= 0 ? c.level : 2;
  for (int N = 1; N <= c.max_N; ++N) {
    // highest PBW level the mode relation may touch; N >= 2 re-expansions above level 3 are not desk-scale
    int cap = N == 1 ? 2 * bound + 1 : std::max(bound, 3);
    MukadeTable T(N, vs(N), us(N), Scalar::w(), cap);
    std::vector<NTuple> states;
    for (int a = 0; a <= bound; ++a)
      for (auto& l : ntuples(N, a)) states.push_back(l);
    for (auto& l : states)
      for (auto& m : states) {
        Scalar a = T.element(l, m, Reduction::bra_first), b = T.element(l, m, Reduction::ket_first);
        rep.checks.push_back({"N=" + std::to_string(N) + " " + pair_name(l, m) + " bra-first vs ket-first",
                              scalar_equal(a, b, c.probabilistic), ""});
      }
    // the defining relation for every generator and |n| <= 2 on PBW states
    for (int i = 1; i <= N; ++i)
      for (int n = -2; n <= 2; ++n) {
        Check ch{"N=" + std::to_string(N) + " mode relation i=" + std::to_string(i) + " n=" + std::to_string(n), true,
                 ""};
        auto rel = mode_relation(i, n);
        int pairs = 0;
        for (auto& l : states)
          for (auto& m : states) {
            int bra_top = total_size(l) + n, ket_top = total_size(m) - n + 1;
            if (bra_top > cap || ket_top > cap) continue;
            ++pairs;
            Scalar d = mode_relation_defect(T, rel, T.bra_space().pbw_state(l, Side::bra),
                                            T.ket_space().pbw_state(m, Side::ket));
            if (!scalar_equal(d, Scalar(), c.probabilistic)) {
              ch.ok = false;
              ch.detail += pair_name(l, m) + " ";
            }
          }
        ch.name += " (" + std::to_string(pairs) + " pairs, levels <= " + std::to_string(cap) + ")";
        rep.checks.push_back(std::move(ch));
      }
  }
  return rep;
}

SuiteReport two_point_suite(const SuiteConfig& c) {
  SuiteReport rep{"two-point", {}, 0};
  Timer timer(rep);
  int kmax = c.level >= 0 ? c.level : 2;
  for (int N = 1; N <= c.max_N; ++N) {
    auto a = two_point(ws(N), vs(N), us(N), kmax);
    auto b = conformal_block(ws(N), vs(N), us(N), kmax);
    for (int k = 0; k <= kmax; ++k)
      rep.checks.push_back({"N=" + std::to_string(N) + " order " + std::to_string(k),
                            scalar_equal(a[k], b[k], c.probabilistic), ""});
  }
  return rep;
}

}  // namespace mukade
