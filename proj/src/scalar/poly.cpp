#include "mukade/poly.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mukade {

namespace {

std::vector<std::string> build_table() {
  std::vector<std::string> t = {"p", "s"};
  for (int i = 1; i <= 4; ++i) t.push_back("u" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) t.push_back("v" + std::to_string(i));
  t.push_back("w");
  for (int i = 1; i <= 4; ++i) t.push_back("w" + std::to_string(i));
  t.push_back("z1");
  t.push_back("z2");
  for (int i = 1; i <= 6; ++i) t.push_back("s" + std::to_string(i));
  for (const char* base : {"a", "b"})
    for (int i = 1; i <= 3; ++i) t.push_back(base + std::to_string(i));
  t.push_back("c");
  for (const char* base : {"x", "y"})
    for (int i = 1; i <= 3; ++i) t.push_back(base + std::to_string(i));
  t.push_back("z");
  return t;
}

struct Table {
  std::mutex mu;
  std::vector<std::string> names = build_table();
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

int Symbols::index(const std::string& name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  for (size_t i = 0; i < t.names.size(); ++i)
    if (t.names[i] == name) return static_cast<int>(i);
  return -1;
}

int Symbols::require(const std::string& name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  for (size_t i = 0; i < t.names.size(); ++i)
    if (t.names[i] == name) return static_cast<int>(i);
  if (t.names.size() >= static_cast<size_t>(kMaxVars))
    throw std::runtime_error("symbol table full: " + name);
  t.names.push_back(name);
  return static_cast<int>(t.names.size()) - 1;
}

const std::string& Symbols::name(int i) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.at(i);
}

int Symbols::count() {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return static_cast<int>(t.names.size());
}

int Symbols::p() { return 0; }
int Symbols::s() { return 1; }
int Symbols::u(int i) { return 1 + i; }
int Symbols::v(int i) { return 5 + i; }
int Symbols::w() { return 10; }
int Symbols::w(int i) { return 10 + i; }
int Symbols::z(int i) { return 14 + i; }
int Symbols::sp(int i) { return 16 + i; }

// ---------------------------------------------------------------------------

Poly::Poly(long c) {
  if (c != 0) t_.push_back({Mono{}, mpz_class(c)});
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) t_.push_back({Mono{}, c});
}

Poly::Poly(const mpz_class& c, const Mono& m) {
  if (c != 0) t_.push_back({m, c});
}

Poly Poly::var(int i, int k) { return Poly(mpz_class(1), Mono::var(i, k)); }

Poly Poly::from_terms(std::vector<Term> t) {
  std::sort(t.begin(), t.end(),
            [](const Term& a, const Term& b) { return lex_cmp(a.m, b.m) > 0; });
  Poly r;
  for (auto& x : t) {
    if (!r.t_.empty() && r.t_.back().m == x.m) {
      r.t_.back().c += x.c;
      if (r.t_.back().c == 0) r.t_.pop_back();
    } else if (x.c != 0) {
      r.t_.push_back(std::move(x));
    }
  }
  return r;
}

bool Poly::is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c == 1; }

mpz_class Poly::constant_value() const {
  if (t_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("not a constant polynomial");
  return t_[0].c;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.t_) x.c = -x.c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = lex_cmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      mpz_class s = t_[i].c + o.t_[j].c;
      if (s != 0) r.t_.push_back({t_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < t_.size()) r.t_.push_back(t_[i++]);
  while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const mpz_class& c, const Mono& m) const {
  Poly r;
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (auto& x : t_) r.t_.push_back({x.m * m, x.c * c});
  return r;
}

namespace {

struct HeapItem {
  Mono m;
  uint32_t i, j;
};

struct HeapLess {
  bool operator()(const HeapItem& a, const HeapItem& b) const { return lex_cmp(a.m, b.m) < 0; }
};

}  // namespace

Poly Poly::operator*(const Poly& o) const {
  if (t_.empty() || o.t_.empty()) return Poly();
  if (t_.size() == 1) return o.mul_term(t_[0].c, t_[0].m);
  if (o.t_.size() == 1) return mul_term(o.t_[0].c, o.t_[0].m);
  const Poly& A = t_.size() <= o.t_.size() ? *this : o;
  const Poly& B = t_.size() <= o.t_.size() ? o : *this;
  // Johnson's heap multiplication: one stream per term of A.
  std::priority_queue<HeapItem, std::vector<HeapItem>, HeapLess> heap;
  heap.push({A.t_[0].m * B.t_[0].m, 0, 0});
  Poly r;
  r.t_.reserve(A.t_.size() + B.t_.size());
  mpz_class acc;
  while (!heap.empty()) {
    Mono cur = heap.top().m;
    acc = 0;
    while (!heap.empty() && heap.top().m == cur) {
      HeapItem it = heap.top();
      heap.pop();
      mpz_addmul(acc.get_mpz_t(), A.t_[it.i].c.get_mpz_t(), B.t_[it.j].c.get_mpz_t());
      if (it.j == 0 && it.i + 1 < A.t_.size())
        heap.push({A.t_[it.i + 1].m * B.t_[0].m, it.i + 1, 0});
      if (it.j + 1 < B.t_.size()) heap.push({A.t_[it.i].m * B.t_[it.j + 1].m, it.i, it.j + 1});
    }
    if (acc != 0) r.t_.push_back({cur, acc});
  }
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool Poly::divide(const Poly& A, const Poly& B, Poly* Q) {
  if (B.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly q;
  if (A.is_zero()) {
    if (Q) *Q = q;
    return true;
  }
  const Term& lb = B.t_[0];
  if (B.t_.size() == 1) {
    q.t_.reserve(A.t_.size());
    for (auto& x : A.t_) {
      if (!x.m.divisible_by(lb.m)) return false;
      if (!mpz_divisible_p(x.c.get_mpz_t(), lb.c.get_mpz_t())) return false;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), x.c.get_mpz_t(), lb.c.get_mpz_t());
      q.t_.push_back({x.m / lb.m, std::move(c)});
    }
    if (Q) *Q = std::move(q);
    return true;
  }
  // Monagan-Pearce heap division; heap holds products q_i * b_j for j >= 1.
  std::priority_queue<HeapItem, std::vector<HeapItem>, HeapLess> heap;
  size_t k = 0;
  mpz_class acc;
  for (;;) {
    bool have_a = k < A.t_.size();
    if (!have_a && heap.empty()) break;
    Mono cur;
    if (have_a && (heap.empty() || lex_cmp(A.t_[k].m, heap.top().m) >= 0))
      cur = A.t_[k].m;
    else
      cur = heap.top().m;
    acc = 0;
    if (have_a && A.t_[k].m == cur) acc = A.t_[k++].c;
    while (!heap.empty() && heap.top().m == cur) {
      HeapItem it = heap.top();
      heap.pop();
      mpz_submul(acc.get_mpz_t(), q.t_[it.i].c.get_mpz_t(), B.t_[it.j].c.get_mpz_t());
      if (it.j + 1 < B.t_.size()) heap.push({q.t_[it.i].m * B.t_[it.j + 1].m, it.i, it.j + 1});
    }
    if (acc == 0) continue;
    if (!cur.divisible_by(lb.m)) return false;
    if (!mpz_divisible_p(acc.get_mpz_t(), lb.c.get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), acc.get_mpz_t(), lb.c.get_mpz_t());
    Mono qm = cur / lb.m;
    q.t_.push_back({qm, std::move(c)});
    uint32_t qi = static_cast<uint32_t>(q.t_.size() - 1);
    heap.push({qm * B.t_[1].m, qi, 1});
  }
  if (Q) *Q = std::move(q);
  return true;
}

Poly Poly::divexact_int(const mpz_class& c) const {
  Poly r = *this;
  for (auto& x : r.t_) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), c.get_mpz_t());
  return r;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (auto& x : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Mono Poly::min_mono() const {
  if (t_.empty()) return Mono{};
  Mono r = t_[0].m;
  for (auto& x : t_) r = Mono::min(r, x.m);
  return r;
}

int Poly::degree(int var) const {
  int d = 0;
  bool first = true;
  for (auto& x : t_) {
    if (first || x.m[var] > d) d = x.m[var];
    first = false;
  }
  return d;
}

uint64_t Poly::var_mask() const {
  uint64_t m = 0;
  for (auto& x : t_)
    for (int i = 0; i < kMaxVars; ++i)
      if (x.m[i]) m |= (uint64_t(1) << i);
  return m;
}

int Poly::max_abs_exponent() const {
  int d = 0;
  for (auto& x : t_)
    for (int i = 0; i < kMaxVars; ++i) d = std::max(d, std::abs(static_cast<int>(x.m[i])));
  return d;
}

namespace {

std::string mono_str(const Mono& m) {
  std::string r;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!m[i]) continue;
    if (!r.empty()) r += '*';
    r += Symbols::name(i);
    if (m[i] != 1) r += "^" + std::to_string(m[i]);
  }
  return r;
}

}  // namespace

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string r;
  bool first = true;
  for (auto& x : t_) {
    mpz_class a = abs(x.c);
    bool neg = x.c < 0;
    if (first)
      r += neg ? "-" : "";
    else
      r += neg ? "-" : "+";
    first = false;
    std::string ms = mono_str(x.m);
    if (ms.empty()) {
      r += a.get_str();
    } else {
      if (a != 1) r += a.get_str() + "*";
      r += ms;
    }
  }
  return r;
}

}  // namespace mukade
