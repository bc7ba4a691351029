#pragma once

#include <string>
#include <vector>

#include "mukade/linalg.hpp"
#include "mukade/partition.hpp"

namespace mukade {

struct FixtureTable {
  std::string name, caption, source;
  int N = 1;
  std::vector<int> levels;
  int sign = 1;
  std::vector<NTuple> rows, cols;
  std::vector<std::vector<std::string>> text;  // entries as transcribed
  Matrix entries;
};

std::string fixture_dir();
// throws std::runtime_error with the file name on a malformed fixture
FixtureTable load_fixture(const std::string& path);
std::vector<FixtureTable> load_alpha_fixtures(const std::string& dir = fixture_dir());

// X^(i)_n acting on a PBW state, expanded in PBW states
struct ActionFixture {
  bool ket = true;
  int i = 1, n = 0;
  NTuple state;
  std::vector<std::pair<Scalar, NTuple>> result;
};

// lhs <X_bra|V|X_ket> (or the K-basis element) = sum of coeff * <X_b|V|X_k> plus constants
struct ElementTerm {
  Scalar coeff;
  bool constant = true;
  NTuple bra, ket;
};

struct ElementFixture {
  std::string name;
  bool K_basis = false;
  NTuple bra, ket;
  std::vector<ElementTerm> rhs;
  // corrected right-hand side for a displayed formula that does not hold as printed
  std::vector<ElementTerm> erratum;
  std::string erratum_note;
};

struct MatrixElementFixture {
  std::string name, caption, source;
  int N = 1;
  std::vector<ActionFixture> actions;
  std::vector<ElementFixture> elements;
};

MatrixElementFixture load_element_fixture(const std::string& path);
std::vector<MatrixElementFixture> load_element_fixtures(const std::string& dir = fixture_dir());

}  // namespace mukade
