#include "mukade/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace mukade {

std::string fixture_dir() {
  if (const char* d = std::getenv("MUKADE_FIXTURES")) return d;
  return MUKADE_FIXTURE_DIR;
}

FixtureTable load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  FixtureTable t;
  try {
    auto j = nlohmann::json::parse(in);
    t.name = std::filesystem::path(path).stem().string();
    t.caption = j.at("caption").get<std::string>();
    t.source = j.at("source").get<std::string>();
    t.N = j.at("N").get<int>();
    t.levels = j.at("levels").get<std::vector<int>>();
    t.sign = j.at("sign").get<std::string>() == "-" ? -1 : 1;
    for (auto& r : j.at("rows")) t.rows.push_back(parse_ntuple(r.get<std::string>()));
    for (auto& c : j.at("cols")) t.cols.push_back(parse_ntuple(c.get<std::string>()));
    t.text = j.at("entries").get<std::vector<std::vector<std::string>>>();
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  if (t.text.size() != t.rows.size()) throw std::runtime_error(path + ": row count mismatch");
  for (size_t r = 0; r < t.text.size(); ++r) {
    if (t.text[r].size() != t.cols.size()) throw std::runtime_error(path + ": column count mismatch");
    Vec row;
    for (auto& s : t.text[r]) {
      try {
        row.push_back(parse_scalar(s));
      } catch (const std::exception& e) {
        throw std::runtime_error(path + ": entry '" + s + "': " + e.what());
      }
    }
    t.entries.push_back(std::move(row));
  }
  return t;
}

namespace {

std::vector<std::string> json_files(const std::string& dir) {
  std::vector<std::string> files;
  for (auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

// replaces each {name} by (definition)
std::string expand(const std::string& s, const std::map<std::string, std::string>& defs) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '{') {
      out += s[i];
      continue;
    }
    size_t e = s.find('}', i);
    if (e == std::string::npos) throw std::runtime_error("unterminated '{' in '" + s + "'");
    auto it = defs.find(s.substr(i + 1, e - i - 1));
    if (it == defs.end()) throw std::runtime_error("undefined name in '" + s + "'");
    out += "(" + it->second + ")";
    i = e;
  }
  return out;
}

std::vector<ElementTerm> parse_terms(const nlohmann::json& arr, const std::map<std::string, std::string>& defs) {
  std::vector<ElementTerm> out;
  for (auto& t : arr) {
    ElementTerm e;
    e.coeff = parse_scalar(expand(t.at(0).get<std::string>(), defs));
    if (t.size() == 3) {
      e.constant = false;
      e.bra = parse_ntuple(t.at(1).get<std::string>());
      e.ket = parse_ntuple(t.at(2).get<std::string>());
    } else if (t.size() != 1) {
      throw std::runtime_error("a term is [coeff] or [coeff, bra, ket]");
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<FixtureTable> load_alpha_fixtures(const std::string& dir) {
  std::vector<FixtureTable> out;
  for (auto& f : json_files(dir + "/alpha")) out.push_back(load_fixture(f));
  return out;
}

MatrixElementFixture load_element_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  MatrixElementFixture f;
  try {
    auto j = nlohmann::json::parse(in);
    f.name = std::filesystem::path(path).stem().string();
    f.caption = j.at("caption").get<std::string>();
    f.source = j.at("source").get<std::string>();
    f.N = j.at("N").get<int>();
    std::map<std::string, std::string> defs;
    if (j.contains("definitions")) defs = j["definitions"].get<std::map<std::string, std::string>>();
    for (auto& a : j.at("actions")) {
      ActionFixture af;
      af.ket = a.at("side").get<std::string>() == "ket";
      af.i = a.at("i").get<int>();
      af.n = a.at("n").get<int>();
      af.state = parse_ntuple(a.at("state").get<std::string>());
      for (auto& r : a.at("result"))
        af.result.emplace_back(parse_scalar(expand(r.at(0).get<std::string>(), defs)),
                               parse_ntuple(r.at(1).get<std::string>()));
      f.actions.push_back(std::move(af));
    }
    for (auto& e : j.at("elements")) {
      ElementFixture ef;
      ef.name = e.at("name").get<std::string>();
      ef.K_basis = e.value("basis", std::string("X")) == "K";
      ef.bra = parse_ntuple(e.at("bra").get<std::string>());
      ef.ket = parse_ntuple(e.at("ket").get<std::string>());
      ef.rhs = parse_terms(e.at("rhs"), defs);
      if (e.contains("erratum")) {
        ef.erratum = parse_terms(e["erratum"].at("rhs"), defs);
        ef.erratum_note = e["erratum"].at("note").get<std::string>();
      }
      f.elements.push_back(std::move(ef));
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return f;
}

std::vector<MatrixElementFixture> load_element_fixtures(const std::string& dir) {
  std::vector<MatrixElementFixture> out;
  for (auto& f : json_files(dir + "/mukade")) out.push_back(load_element_fixture(f));
  return out;
}

}  // namespace mukade
