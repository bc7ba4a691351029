#pragma once

#include <string>
#include <vector>

#include "mukade/fixtures.hpp"

namespace mukade {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool ok() const;
  int failures() const;
};

struct SuiteConfig {
  int max_N = 2;
  // total level bound; negative selects the per-suite defaults
  int level = -1;
  bool probabilistic = false;
  std::string fixtures = fixture_dir();
};

SuiteReport alpha_suite(const SuiteConfig& c);
// displayed matrix elements and free-field actions, as printed or through a recorded erratum
SuiteReport element_suite(const SuiteConfig& c);
SuiteReport factorization_suite(const SuiteConfig& c);
SuiteReport reduction_order_suite(const SuiteConfig& c);
SuiteReport two_point_suite(const SuiteConfig& c);
SuiteReport norms_suite(const SuiteConfig& c);
SuiteReport kac_suite(const SuiteConfig& c);
SuiteReport singular_suite(const SuiteConfig& c);
SuiteReport screened_suite(const SuiteConfig& c);
SuiteReport hyper_suite(const SuiteConfig& c);
SuiteReport hyper_numeric_suite(const SuiteConfig& c);
// scalar field, q-Pochhammer and Nekrasov identities plus reduction-order independence
SuiteReport property_suite(const SuiteConfig& c);

}  // namespace mukade
