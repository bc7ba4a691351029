// One line per acceptance criterion. With --expect-red K the exit code is 0 only when the
// red criteria are exactly the listed ones and criterion 2 fails only on the N=2 fixture.
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mukade/regression.hpp"

using namespace mukade;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::function<SuiteReport(const SuiteConfig&)>> suites;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_red;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--expect-red") == 0) expected_red.insert(std::atoi(argv[i + 1]));

  const std::vector<Criterion> criteria = {
      {1, "alpha tables reproduced entry by entry", {alpha_suite}},
      {2, "displayed matrix elements and free-field actions", {element_suite}},
      {3, "factorization into Nekrasov factors", {factorization_suite}},
      {4, "norms and orthogonality", {norms_suite}},
      {5, "Kac determinant", {kac_suite}},
      {6, "singular vectors", {singular_suite}},
      {7, "screened construction of generalized Macdonald functions", {screened_suite}},
      {8, "hyperseries exact identities", {hyper_suite}},
      {9, "hyperseries numeric identities", {hyper_numeric_suite}},
      {10, "two-point function against the conformal block", {two_point_suite}},
      {11, "property suites", {property_suite}},
  };

  SuiteConfig cfg;
  std::set<int> red;
  bool red_outside_N2_fixture = false;
  for (auto& c : criteria) {
    int checks = 0, failures = 0;
    double seconds = 0;
    std::vector<std::string> failed;
    for (auto& f : c.suites) {
      SuiteReport r = f(cfg);
      checks += static_cast<int>(r.checks.size());
      failures += r.failures();
      seconds += r.seconds;
      for (auto& ch : r.checks)
        if (!ch.ok) failed.push_back(r.suite + ": " + ch.name);
    }
    bool ok = failures == 0 && checks > 0;
    std::printf("criterion %2d: %s  %s (%d checks, %d failing, %.1f s)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(),
                checks, failures, seconds);
    for (auto& f : failed) {
      std::printf("    failing: %s\n", f.c_str());
      if (c.id == 2 && f.rfind("elements: f2_N2:", 0) != 0) red_outside_N2_fixture = true;
    }
    std::fflush(stdout);
    if (!ok) red.insert(c.id);
  }
  if (expected_red.empty()) return red.empty() ? 0 : 1;
  bool as_expected = red == expected_red && !red_outside_N2_fixture;
  std::printf("red criteria %s the expected set\n", as_expected ? "match" : "do not match");
  return as_expected ? 0 : 1;
}
