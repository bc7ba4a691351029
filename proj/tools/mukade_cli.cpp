#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "mukade/fixtures.hpp"
#include "mukade/fock.hpp"
#include "mukade/genmac.hpp"
#include "mukade/hyperseries.hpp"
#include "mukade/macdonald.hpp"
#include "mukade/mukade.hpp"
#include "mukade/nekrasov.hpp"
#include "mukade/regression.hpp"
#include "mukade/screened.hpp"

using namespace mukade;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  int n = 1;
  int level = -1;
  bool probabilistic = false;
  bool json = false;
};

std::vector<Scalar> symbols(int N, Scalar (*f)(int)) {
  std::vector<Scalar> r;
  for (int i = 1; i <= N; ++i) r.push_back(f(i));
  return r;
}

std::vector<Scalar> u_params(int N) { return symbols(N, &Scalar::u); }
std::vector<Scalar> v_params(int N) { return symbols(N, &Scalar::v); }
std::vector<Scalar> w_params(int N) { return symbols(N, static_cast<Scalar (*)(int)>(&Scalar::w)); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

int thread_count() {
  if (const char* e = std::getenv("MUKADE_THREADS")) {
    int k = std::atoi(e);
    if (k > 0) return k;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

json series_json(const RatioSeries& f) {
  json out = json::array();
  for (auto& [e, c] : f.c) out.push_back({{"z_exponents", e}, {"coeff", c.str()}});
  return out;
}

json fock_json(const FockVector& v) {
  json out = json::object();
  for (auto& [lab, c] : v.terms) out[ntuple_str(lab)] = c.str();
  return out;
}

using SuiteFn = std::function<SuiteReport(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& all_suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"alpha", alpha_suite},
      {"elements", element_suite},
      {"factorization", factorization_suite},
      {"two-point", two_point_suite},
      {"norms", norms_suite},
      {"kac", kac_suite},
      {"singular", singular_suite},
      {"screened", screened_suite},
      {"hyper", hyper_suite},
      {"hyper-numeric", hyper_numeric_suite},
      {"properties", property_suite},
  };
  return s;
}

std::vector<std::string> expand_suite(const std::string& name) {
  if (name == "all") {
    std::vector<std::string> r;
    for (auto& [n, f] : all_suites()) r.push_back(n);
    return r;
  }
  if (name == "mukade") return {"elements", "factorization", "two-point"};
  if (name == "kac") return {"kac", "singular"};
  if (name == "hyper") return {"hyper", "hyper-numeric"};
  for (auto& [n, f] : all_suites())
    if (n == name) return {n};
  throw CLI::ValidationError("suite", "unknown suite " + name);
}

// suites run concurrently; the report keeps the requested order
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg) {
  std::vector<SuiteReport> out(names.size());
  std::vector<std::exception_ptr> errors(names.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) < names.size();) {
      for (auto& [n, f] : all_suites())
        if (n == names[k]) try {
            out[k] = f(cfg);
          } catch (...) {
            errors[k] = std::current_exception();
          }
    }
  };
  std::vector<std::thread> pool;
  int T = std::min<int>(thread_count(), static_cast<int>(names.size()));
  for (int i = 0; i < T; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

int report(const std::vector<SuiteReport>& reps, const SuiteConfig& cfg, bool as_json) {
  bool ok = true;
  for (auto& r : reps) ok = ok && r.ok();
  if (as_json) {
    json j;
    j["config"] = {{"max_N", cfg.max_N}, {"level", cfg.level}, {"probabilistic", cfg.probabilistic}};
    j["ok"] = ok;
    j["suites"] = json::array();
    for (auto& r : reps) {
      json s{{"suite", r.suite}, {"ok", r.ok()}, {"seconds", r.seconds}, {"checks", json::array()}};
      for (auto& c : r.checks) s["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      j["suites"].push_back(s);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto& r : reps) {
      for (auto& c : r.checks)
        std::cout << (c.ok ? "PASS " : "FAIL ") << r.suite << ": " << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                  << "\n";
      std::printf("%s %s: %zu checks, %d failing, %.2f s\n", r.ok() ? "PASS" : "FAIL", r.suite.c_str(), r.checks.size(),
                  r.failures(), r.seconds);
    }
  }
  return ok ? 0 : 1;
}

SuiteConfig make_config(const Globals& g, int max_N) {
  SuiteConfig c;
  c.max_N = max_N;
  c.level = g.level;
  c.probabilistic = g.probabilistic;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Macdonald functions, Mukade operators and hypergeometric identities"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--n", g.n, "number of Fock spaces N")->check(CLI::Range(1, 8));
  app.add_option("--level", g.level, "level bound");
  auto* exact = app.add_flag("--exact", "exact equality (default)");
  auto* prob = app.add_flag("--probabilistic", g.probabilistic, "modular prefilter only");
  exact->excludes(prob);
  app.add_flag("--json", g.json, "machine-readable output");
  app.fallthrough();

  int rc = 0;
  auto emit = [&](const json& j, const std::string& plain) {
    if (g.json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << plain << (plain.empty() || plain.back() != '\n' ? "\n" : "");
  };

  // fock
  auto* fock = app.add_subcommand("fock", "Fock space operations");
  fock->require_subcommand(1);
  auto* gram = fock->add_subcommand("gram", "Gram matrix of the PBW basis");
  gram->callback([&] {
    int lev = std::max(g.level, 0);
    FockSpace F(g.n, u_params(g.n));
    Matrix G = F.gram(lev);
    json j{{"N", g.n}, {"level", lev}, {"labels", json::array()}, {"gram", json::array()}};
    for (auto& l : F.labels(lev)) j["labels"].push_back(ntuple_str(l));
    for (auto& row : G) {
      json r = json::array();
      for (auto& x : row) r.push_back(x.str());
      j["gram"].push_back(r);
    }
    std::cout << j.dump(2) << "\n";
  });
  auto* kac = fock->add_subcommand("kac", "Kac determinant and its u-dependent factor");
  kac->callback([&] {
    int lev = std::max(g.level, 1);
    Scalar det = kac_determinant(g.n, lev, u_params(g.n));
    Scalar uf = kac_u_factor(g.n, lev, u_params(g.n));
    emit({{"determinant", det.str()}, {"u_factor", uf.str()}, {"quotient", (det / uf).str()}},
         "det = " + det.str() + "\nu-factor = " + uf.str() + "\nquotient = " + (det / uf).str());
  });

  // macdonald
  auto* mac = app.add_subcommand("macdonald", "ordinary Macdonald functions");
  mac->require_subcommand(1);
  std::string lambda_text;
  auto* macP = mac->add_subcommand("P", "power-sum expansion of P_lambda");
  macP->add_option("--lambda", lambda_text, "partition, e.g. [2,1]")->required();
  macP->callback([&] {
    SymFunc f = macdonald_P(parse_partition(lambda_text));
    json j = json::object();
    for (auto& [p, c] : f.terms) j[p.str()] = c.str();
    emit(j, f.str());
  });
  auto* macQ = mac->add_subcommand("Q", "power-sum expansion of Q_lambda");
  macQ->add_option("--lambda", lambda_text, "partition")->required();
  macQ->callback([&] {
    SymFunc f = macdonald_Q(parse_partition(lambda_text));
    json j = json::object();
    for (auto& [p, c] : f.terms) j[p.str()] = c.str();
    emit(j, f.str());
  });

  // genmac
  auto* gen = app.add_subcommand("genmac", "generalized Macdonald functions");
  gen->require_subcommand(1);
  std::string sign_text = "+";
  auto* alpha = gen->add_subcommand("alpha", "alpha table between K and PBW bases");
  alpha->add_option("--sign", sign_text, "+ (ket) or - (bra)");
  alpha->callback([&] {
    int lev = std::max(g.level, 1);
    int sign = sign_text == "-" ? -1 : 1;
    GenMac G(g.n, u_params(g.n));
    Matrix A = G.alpha_matrix(lev, sign);
    const auto& L = G.fock().labels(lev);
    json j{{"N", g.n}, {"level", lev}, {"sign", sign}, {"rows", json::array()}};
    std::ostringstream plain;
    for (size_t r = 0; r < L.size(); ++r) {
      json row{{"K", ntuple_str(L[r])}, {"entries", json::object()}};
      for (size_t k = 0; k < L.size(); ++k) {
        row["entries"][ntuple_str(L[k])] = A[r][k].str();
        plain << ntuple_str(L[r]) << " " << ntuple_str(L[k]) << " " << A[r][k].str() << "\n";
      }
      j["rows"].push_back(row);
    }
    emit(j, plain.str());
  });
  auto* gstate = gen->add_subcommand("state", "P, Q and K states in the boson basis");
  gstate->add_option("--lambda", lambda_text, "N-tuple, e.g. [[1],[]]")->required();
  gstate->callback([&] {
    NTuple l = parse_ntuple(lambda_text);
    GenMac G(static_cast<int>(l.size()), u_params(static_cast<int>(l.size())));
    json j{{"P", fock_json(G.P_state(l, Side::ket).vector)},
           {"Q", fock_json(G.Q_state(l))},
           {"K", fock_json(G.K_state(l, Side::ket))},
           {"eigenvalue", eigenvalue(l, G.params()).str()}};
    std::cout << j.dump(2) << "\n";
  });

  // nekrasov
  auto* nek = app.add_subcommand("nekrasov", "Nekrasov factors and conformal blocks");
  nek->require_subcommand(1);
  int kmax = 2;
  auto* zfun = nek->add_subcommand("zfun", "conformal block order by order");
  zfun->add_option("--kmax", kmax, "highest order");
  zfun->callback([&] {
    auto z = conformal_block(w_params(g.n), v_params(g.n), u_params(g.n), kmax);
    json j = json::array();
    for (auto& x : z) j.push_back(x.str());
    std::cout << json{{"N", g.n}, {"orders", j}}.dump(2) << "\n";
  });
  std::string mu_text, arg_text = "u1";
  auto* factor = nek->add_subcommand("factor", "N_{lambda,mu}(u)");
  factor->add_option("--lambda", lambda_text, "partition")->required();
  factor->add_option("--mu", mu_text, "partition")->required();
  factor->add_option("--u", arg_text, "argument expression");
  factor->callback([&] {
    Scalar v = nekrasov(parse_partition(lambda_text), parse_partition(mu_text), parse_scalar(arg_text));
    emit({{"value", v.str()}}, v.str());
  });

  // hyper
  auto* hyp = app.add_subcommand("hyper", "hypergeometric series");
  hyp->require_subcommand(1);
  int degree = 2, mm = 1, nn = 1;
  double qv = 0.2, tv = 3.0, xv = 1.0;
  unsigned prec = 200;
  std::string s_text, y_text;
  auto* pn = hyp->add_subcommand("pn", "p_n(x; s | q, t) to a given z-degree");
  pn->add_option("--degree", degree, "truncation degree");
  pn->callback([&] {
    std::vector<Scalar> s;
    for (int i = 1; i <= g.n; ++i) s.push_back(Scalar::var(Symbols::sp(i)));
    RatioSeries f = pn_series(g.n, s, degree, Scalar::q(), Scalar::t());
    emit(json{{"n", g.n}, {"degree", degree}, {"terms", series_json(f)}}, f.str());
  });
  auto* euler = hyp->add_subcommand("euler-check", "q-Euler transformation per u-degree");
  euler->add_option("--m", mm, "size of a, x");
  euler->add_option("--degree", degree, "highest u-degree");
  euler->callback([&] {
    auto named = [](const std::string& s) { return Scalar::var(Symbols::require(s)); };
    std::vector<Scalar> a, x, b, y;
    for (int i = 1; i <= mm; ++i) {
      a.push_back(named("a" + std::to_string(i)));
      x.push_back(named("x" + std::to_string(i)));
    }
    for (int k = 1; k <= g.n; ++k) {
      b.push_back(named("b" + std::to_string(k)));
      y.push_back(named("y" + std::to_string(k)));
    }
    auto L = kn_phi(a, x, b, named("c"), y, degree);
    auto R = kn_euler_rhs(a, x, b, named("c"), y, degree);
    json j = json::array();
    std::ostringstream plain;
    bool all = true;
    for (int d = 0; d <= degree; ++d) {
      bool ok = scalar_equal(L[d], R[d], g.probabilistic);
      all = all && ok;
      j.push_back({{"degree", d}, {"ok", ok}});
      plain << "u^" << d << (ok ? " PASS" : " FAIL") << "\n";
    }
    emit(json{{"m", mm}, {"n", g.n}, {"ok", all}, {"degrees", j}}, plain.str());
    rc = all ? 0 : 1;
  });
  auto* trf = hyp->add_subcommand("transform-check", "numeric transformation formula (m = 0: principal specialization)");
  trf->add_option("--m", mm, "number of y variables");
  trf->add_option("--q", qv);
  trf->add_option("--t", tv);
  trf->add_option("--x", xv);
  trf->add_option("--s", s_text, "comma list of n+m values");
  trf->add_option("--y", y_text, "comma list of m values");
  trf->add_option("--prec", prec, "working precision in bits");
  trf->callback([&] {
    std::vector<double> s = s_text.empty() ? std::vector<double>{} : parse_doubles(s_text);
    std::vector<double> y = y_text.empty() ? std::vector<double>{} : parse_doubles(y_text);
    for (int k = static_cast<int>(s.size()); k < g.n + mm; ++k) s.push_back(0.7 + 0.6 * k);
    for (int k = static_cast<int>(y.size()); k < mm; ++k) y.push_back(0.05 / (k + 1));
    unsigned digits = static_cast<unsigned>(std::ceil(prec * std::log10(2.0)));
    NumericCheck r = transform_check(g.n, mm, qv, tv, s, xv, y, digits);
    emit(json{{"name", r.name}, {"deviation", r.deviation}, {"order", r.order}, {"converged", r.converged}, {"ok", r.ok}},
         r.name + ": relative deviation " + sci(r.deviation) + " at order " + std::to_string(r.order) +
             (r.ok ? " PASS" : " FAIL"));
    rc = r.ok ? 0 : 1;
  });

  // screened
  auto* scr = app.add_subcommand("screened", "screened vertex operators");
  scr->require_subcommand(1);
  std::string profile_text;
  auto* sgm = scr->add_subcommand("genmac", "screened construction against |Q>");
  sgm->add_option("--n-profile", profile_text, "comma list n_1,...,n_N")->required();
  sgm->add_option("--lambda", lambda_text, "N-tuple")->required();
  sgm->callback([&] {
    auto prof = parse_ints(profile_text);
    NTuple l = parse_ntuple(lambda_text);
    int N = static_cast<int>(prof.size());
    auto u = u_params(N);
    FockVector via = genmac_via_screened(l, prof, u);
    FockVector Q = GenMac(N, u).Q_state(l);
    Scalar R = R_coefficient(l, prof, u);
    bool ok = via == Q.scaled(R);
    json j{{"screened", fock_json(via)}, {"Q", fock_json(Q)}, {"R", R.str()}, {"ratio_is_R", ok}};
    std::cout << j.dump(2) << "\n";
    rc = ok ? 0 : 1;
  });

  // mukade
  auto* muk = app.add_subcommand("mukade", "matrix elements of the Mukade operator");
  muk->require_subcommand(1);
  auto* elem = muk->add_subcommand("element", "<X_lambda(v)|V(w)|X_mu(u)>");
  bool kbasis = false;
  elem->add_option("--lambda", lambda_text, "bra N-tuple")->required();
  elem->add_option("--mu", mu_text, "ket N-tuple")->required();
  elem->add_flag("--K", kbasis, "use the integral-form basis");
  elem->callback([&] {
    NTuple l = parse_ntuple(lambda_text), m = parse_ntuple(mu_text);
    int N = static_cast<int>(l.size());
    MukadeTable T(N, v_params(N), u_params(N), Scalar::w(), std::max(6, total_size(l) + total_size(m)));
    Scalar v = kbasis ? T.K_element(l, m) : T.element(l, m);
    emit({{"value", v.str()}}, v.str());
  });
  int max_level = 2;
  auto* mver = muk->add_subcommand("verify", "factorization table");
  mver->add_option("--max-level", max_level, "bound on |lambda|+|mu|");
  mver->callback([&] {
    SuiteConfig c = make_config(g, g.n);
    c.level = max_level;
    rc = report({factorization_suite(c)}, c, g.json);
  });

  // verify
  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::string suite_name = "all";
  ver->add_option("suite", suite_name,
                  "alpha, mukade, kac, norms, screened, hyper, all, or a single suite "
                  "(elements, factorization, two-point, singular, hyper-numeric, properties)");
  int max_N = 2;
  ver->add_option("--max-N", max_N, "largest N for the algebraic suites");
  ver->callback([&] {
    SuiteConfig c = make_config(g, max_N);
    rc = report(run_suites(expand_suite(suite_name), c), c, g.json);
  });

  // eval
  auto* ev = app.add_subcommand("eval", "parse, substitute and normalize an expression");
  std::string expr;
  std::vector<std::string> binds;
  ev->add_option("expr", expr, "expression")->required();
  ev->add_option("--bind", binds, "substitution name=expression");
  ev->callback([&] {
    Scalar v = parse_scalar(expr);
    std::map<int, Scalar> b;
    for (auto& s : binds) {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--bind", "expected name=expression: " + s);
      int id = Symbols::index(s.substr(0, eq));
      if (id < 0) throw CLI::ValidationError("--bind", "unknown symbol " + s.substr(0, eq));
      b[id] = parse_scalar(s.substr(eq + 1));
    }
    if (!b.empty()) v = v.substitute(b);
    emit({{"value", v.str()}}, v.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
