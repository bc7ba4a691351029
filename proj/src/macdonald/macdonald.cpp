#include "mukade/macdonald.hpp"

#include <mutex>
#include <sstream>

namespace mukade {

SymFunc SymFunc::power(const Partition& l, const Scalar& c) {
  SymFunc f;
  f.add(l, c);
  return f;
}

void SymFunc::add(const Partition& l, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(l);
  if (it == terms.end()) {
    terms.emplace(l, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  for (auto& [l, c] : o.terms) r.add(l, c);
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  SymFunc r = *this;
  for (auto& [l, c] : o.terms) r.add(l, -c);
  return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  SymFunc r;
  for (auto& [a, x] : terms)
    for (auto& [b, y] : o.terms) {
      std::vector<int> parts = a.parts();
      parts.insert(parts.end(), b.parts().begin(), b.parts().end());
      r.add(Partition(parts), x * y);
    }
  return r;
}

SymFunc SymFunc::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  SymFunc r;
  for (auto& [l, x] : terms) r.terms.emplace(l, x * c);
  return r;
}

Scalar SymFunc::coeff(const Partition& l) const {
  auto it = terms.find(l);
  return it == terms.end() ? Scalar() : it->second;
}

bool SymFunc::operator==(const SymFunc& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (auto& [l, c] : terms)
    if (!(o.coeff(l) == c)) return false;
  return true;
}

std::map<int, SymFunc> SymFunc::by_degree() const {
  std::map<int, SymFunc> r;
  for (auto& [l, c] : terms) r[l.size()].terms.emplace(l, c);
  return r;
}

std::string SymFunc::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")*p" << it->first.str();
  }
  return os.str();
}

Scalar power_norm(const Partition& l) {
  Scalar r(z_lambda(l));
  for (int x : l.parts()) r *= kappa(x);
  return r;
}

Scalar qt_inner(const SymFunc& f, const SymFunc& g) {
  Scalar r;
  for (auto& [l, c] : f.terms) {
    auto it = g.terms.find(l);
    if (it != g.terms.end()) r += c * it->second * power_norm(l);
  }
  return r;
}

namespace {

// number of maps from the parts of l onto the rows of m with block sums m_j
long count_fillings(const std::vector<int>& l, size_t k, std::vector<int>& rem) {
  if (k == l.size()) {
    for (int x : rem)
      if (x) return 0;
    return 1;
  }
  long n = 0;
  for (auto& x : rem)
    if (x >= l[k]) {
      x -= l[k];
      n += count_fillings(l, k + 1, rem);
      x += l[k];
    }
  return n;
}

std::mutex cache_mu;
std::map<int, Matrix> m_to_p_cache;  // rows m_l, columns p_m in partitions(n) order
std::map<std::pair<Partition, int>, SymFunc> p_cache;

const Matrix& m_to_p(int n) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = m_to_p_cache.find(n);
    if (it != m_to_p_cache.end()) return it->second;
  }
  auto parts = partitions(n);
  size_t d = parts.size();
  Matrix R(d, Vec(d));  // p_a = sum_b R[a][b] m_b
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      std::vector<int> rem = parts[b].parts();
      R[a][b] = Scalar(count_fillings(parts[a].parts(), 0, rem));
    }
  // m_b = sum_a (R^-1)[b][a] p_a
  Matrix M = inverse(R);
  std::lock_guard<std::mutex> lock(cache_mu);
  return m_to_p_cache.emplace(n, std::move(M)).first->second;
}

size_t index_of(const std::vector<Partition>& v, const Partition& l) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == l) return i;
  throw std::logic_error("partition not found");
}

}  // namespace

SymFunc monomial(const Partition& l) {
  int n = l.size();
  if (n == 0) return SymFunc::power(Partition());
  auto parts = partitions(n);
  const Matrix& M = m_to_p(n);
  size_t b = index_of(parts, l);
  SymFunc f;
  for (size_t a = 0; a < parts.size(); ++a) f.add(parts[a], M[b][a]);
  return f;
}

SymFunc macdonald_P(const Partition& l, Extension ext) {
  auto key = std::make_pair(l, static_cast<int>(ext));
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = p_cache.find(key);
    if (it != p_cache.end()) return it->second;
  }
  int n = l.size();
  // lower partitions in the chosen linear extension, processed bottom up
  std::vector<Partition> below;
  for (auto& m : partitions(n)) {
    if (m == l) continue;
    bool before = false;
    if (ext == Extension::lex) {
      before = m < l;
    } else {
      // n(m) > n(l) or equal n with reversed lexicographic tie break
      before = m.n() > l.n() || (m.n() == l.n() && m > l);
    }
    if (before) below.push_back(m);
  }
  SymFunc m_l = monomial(l), P = m_l;
  for (auto& m : below) {
    SymFunc Pm = macdonald_P(m, ext);
    Scalar c = qt_inner(m_l, Pm) / qt_inner(Pm, Pm);
    P = P - Pm.scaled(c);
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  p_cache.emplace(key, P);
  return P;
}

SymFunc macdonald_Q(const Partition& l) {
  return macdonald_P(l).scaled(c_lambda(l) / cprime_lambda(l));
}

SymFunc g_r(int r) {
  SymFunc f;
  for (auto& l : partitions(r)) f.add(l, power_norm(l).inverse());
  return f;
}

Scalar b_cell(const Partition& l, int i, int j) {
  if (!l.contains_cell(i, j)) return Scalar(1);
  auto [a, lg] = l.arm_leg(i, j);
  return (1 - Scalar::qt(a, lg + 1)) / (1 - Scalar::qt(a + 1, lg));
}

std::vector<Partition> horizontal_strips(const Partition& m, int r) {
  std::vector<Partition> out;
  int len = m.length();
  std::vector<int> lam(len + 1);
  // row 1 is unbounded above; row i+1 lies between m_{i+1} and m_i
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == len + 1) {
      if (left == 0) out.push_back(Partition(lam));
      return;
    }
    int lo = m[i + 1], hi = i == 0 ? m[1] + left : m[i];
    for (int x = lo; x <= hi && x - lo <= left; ++x) {
      lam[i] = x;
      self(self, i + 1, left - (x - lo));
    }
  };
  rec(rec, 0, r);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::map<Partition, Scalar> pieri_multiply(int r, const Partition& m) {
  std::map<Partition, Scalar> out;
  for (auto& l : horizontal_strips(m, r)) {
    std::set<int> rows, cols;
    for (auto [i, j] : l.cells())
      if (!m.contains_cell(i, j)) {
        rows.insert(i);
        cols.insert(j);
      }
    Scalar c(1);
    for (auto [i, j] : l.cells())
      if (rows.count(i) && !cols.count(j)) c *= b_cell(m, i, j) / b_cell(l, i, j);
    out.emplace(l, c);
  }
  return out;
}

bool kernel_check(int D) {
  for (int n = 1; n <= D; ++n) {
    auto parts = partitions(n);
    std::map<std::pair<Partition, Partition>, Scalar> K;
    for (auto& l : parts) {
      SymFunc P = macdonald_P(l), Q = macdonald_Q(l);
      for (auto& [a, x] : P.terms)
        for (auto& [b, y] : Q.terms) K[{a, b}] += x * y;
    }
    for (auto& a : parts)
      for (auto& b : parts) {
        Scalar expect = a == b ? power_norm(a).inverse() : Scalar();
        auto it = K.find({a, b});
        Scalar got = it == K.end() ? Scalar() : it->second;
        if (!(got == expect)) return false;
      }
  }
  return true;
}

}  // namespace mukade
