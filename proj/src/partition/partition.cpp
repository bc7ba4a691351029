#include "mukade/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace mukade {

Partition::Partition(std::vector<int> parts) {
  for (int x : parts) {
    if (x < 0) throw std::invalid_argument("negative part");
    if (x > 0) parts_.push_back(x);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int i) const {
  return i >= 1 && i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  int m = empty() ? 0 : parts_[0];
  for (int j = 1; j <= m; ++j) {
    int k = 0;
    while (k < length() && parts_[k] >= j) ++k;
    c.push_back(k);
  }
  return Partition(c);
}

int Partition::n() const {
  int r = 0;
  for (int i = 0; i < length(); ++i) r += i * parts_[i];
  return r;
}

std::pair<int, int> Partition::arm_leg(int i, int j) const {
  Partition c = conjugate();
  return {(*this)[i] - j, c[j] - i};
}

bool Partition::contains(const Partition& o) const {
  for (int i = 1; i <= o.length(); ++i)
    if ((*this)[i] < o[i]) return false;
  return true;
}

std::vector<std::pair<int, int>> Partition::cells() const {
  std::vector<std::pair<int, int>> r;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) r.push_back({i, j});
  return r;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(empty() ? 0 : parts_[0], 0);
  for (int x : parts_) m[x - 1]++;
  return m;
}

std::string Partition::str() const {
  std::string r = "[";
  for (int i = 0; i < length(); ++i) {
    if (i) r += ",";
    r += std::to_string(parts_[i]);
  }
  return r + "]";
}

int total_size(const NTuple& t) {
  int s = 0;
  for (auto& p : t) s += p.size();
  return s;
}

std::string ntuple_str(const NTuple& t) {
  std::string r = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) r += ",";
    r += t[i].str();
  }
  return r + "]";
}

namespace {

struct ListParser {
  const std::string& s;
  size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument("expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos) + " in '" + s + "'");
    ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  Partition partition() {
    expect('[');
    std::vector<int> parts;
    if (!peek(']')) {
      for (;;) {
        skip();
        size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) throw std::invalid_argument("expected integer in '" + s + "'");
        parts.push_back(std::stoi(s.substr(st, pos - st)));
        if (!peek(',')) break;
        ++pos;
      }
    }
    expect(']');
    for (size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1]) throw std::invalid_argument("parts not weakly decreasing: " + s);
    return Partition(parts);
  }
};

}  // namespace

Partition parse_partition(const std::string& text) {
  ListParser p{text};
  Partition r = p.partition();
  p.skip();
  if (p.pos != text.size()) throw std::invalid_argument("trailing input in '" + text + "'");
  return r;
}

NTuple parse_ntuple(const std::string& text) {
  ListParser p{text};
  p.expect('[');
  NTuple r;
  if (!p.peek(']')) {
    for (;;) {
      r.push_back(p.partition());
      if (!p.peek(',')) break;
      ++p.pos;
    }
  }
  p.expect(']');
  p.skip();
  if (p.pos != text.size()) throw std::invalid_argument("trailing input in '" + text + "'");
  return r;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rem, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<NTuple> ntuples(int N, int n) {
  std::vector<NTuple> out;
  NTuple cur(N);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == N - 1) {
      for (auto& p : partitions(rem)) {
        cur[i] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int k = rem; k >= 0; --k)
      for (auto& p : partitions(k)) {
        cur[i] = p;
        rec(i + 1, rem - k);
      }
  };
  if (N >= 1) rec(0, n);
  return out;
}

long count_ntuples(int N, int n) { return static_cast<long>(ntuples(N, n).size()); }

std::pair<std::set<std::pair<int, int>>, std::set<std::pair<int, int>>> add_remove_sets(
    const Partition& l) {
  std::set<std::pair<int, int>> A, R;
  for (int i = 1; i <= l.length() + 1; ++i) {
    int j = l[i] + 1;
    if (i == 1 || l[i - 1] >= j) A.insert({i, j});
  }
  for (int i = 1; i <= l.length(); ++i)
    if (l[i + 1] < l[i]) R.insert({i, l[i]});
  return {A, R};
}

Order star_compare(const NTuple& a, const NTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("N-tuple length mismatch");
  if (total_size(a) != total_size(b)) return Order::incomparable;
  int N = static_cast<int>(a.size());
  bool ge = true, le = true, same = true;
  int sa = 0, sb = 0;
  for (int k = N - 1; k >= 0; --k) {
    sa += a[k].size();
    sb += b[k].size();
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
    if (a[k].size() != b[k].size()) same = false;
  }
  if (same) return a == b ? Order::equal : Order::incomparable;
  if (ge) return Order::greater;
  if (le) return Order::less;
  return Order::incomparable;
}

Order dominance_compare(const Partition& a, const Partition& b) {
  if (a == b) return Order::equal;
  if (a.size() != b.size()) return Order::incomparable;
  bool ge = true, le = true;
  int sa = 0, sb = 0;
  int L = std::max(a.length(), b.length());
  for (int i = 1; i <= L; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge) return Order::greater;
  if (le) return Order::less;
  return Order::incomparable;
}

Partition truncate_B(const Partition& l, int r, int s) {
  std::vector<int> v;
  for (int i = 1; i + s <= l.length(); ++i) v.push_back(std::max(l[s + i] - r, 0));
  return Partition(v);
}

Flaming flaming_factors(const Partition& l) {
  int np = l.conjugate().n(), n = l.n(), sz = l.size();
  // q^{n'+|l|/2} t^{-n-|l|/2} with doubled exponents
  Scalar f = Scalar::qt_half(2 * np + sz, -2 * n - sz);
  if (sz % 2) f = -f;
  return {f, Scalar::qt(np, -n)};
}

mpz_class z_lambda(const Partition& l) {
  mpz_class z = 1;
  auto m = l.multiplicities();
  for (size_t i = 0; i < m.size(); ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m[i]);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), i + 1, m[i]);
    z *= f * pw;
  }
  return z;
}

const Scalar& kappa(int n) {
  static std::mutex mu;
  static std::map<int, Scalar> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache[n] = (1 - Scalar::qt(n, 0)) / (1 - Scalar::qt(0, n));
}

Scalar c_lambda(const Partition& l) {
  Scalar r(1);
  for (auto [i, j] : l.cells()) {
    auto [a, lg] = l.arm_leg(i, j);
    r *= 1 - Scalar::qt(a, lg + 1);
  }
  return r;
}

Scalar cprime_lambda(const Partition& l) {
  Scalar r(1);
  for (auto [i, j] : l.cells()) {
    auto [a, lg] = l.arm_leg(i, j);
    r *= 1 - Scalar::qt(a + 1, lg);
  }
  return r;
}

}  // namespace mukade
