#pragma once

#include <queue>
#include <vector>

#include "mukade/poly.hpp"

namespace mukade::detail {

struct Fp {
  uint64_t p;
  explicit Fp(uint64_t p_) : p(p_) {}
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t r = a + b;
    return r >= p ? r - p : r;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  uint64_t pow(uint64_t a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, static_cast<long long>(p - 2)); }
  uint64_t from(const mpz_class& c) const {
    return mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
  }
};

struct TermP {
  Mono m;
  uint64_t c;
};

// sparse polynomial over Z/p, decreasing lex order
struct PolyP {
  std::vector<TermP> t;

  static PolyP one() {
    PolyP r;
    r.t.push_back({Mono{}, 1});
    return r;
  }
  static PolyP from(const Poly& P, const Fp& F) {
    PolyP r;
    for (auto& x : P.terms()) {
      uint64_t c = F.from(x.c);
      if (c) r.t.push_back({x.m, c});
    }
    return r;
  }
  bool is_constant() const { return t.size() == 1 && t[0].m.is_one(); }
  uint64_t var_mask() const {
    uint64_t m = 0;
    for (auto& x : t)
      for (int i = 0; i < kMaxVars; ++i)
        if (x.m[i]) m |= uint64_t(1) << i;
    return m;
  }
  PolyP scale(uint64_t s, const Fp& F) const {
    PolyP r;
    if (!s) return r;
    r.t = t;
    for (auto& x : r.t) x.c = F.mul(x.c, s);
    return r;
  }
  PolyP monic(const Fp& F) const {
    if (t.empty()) return *this;
    return scale(F.inv(t[0].c), F);
  }
  PolyP add(const PolyP& o, const Fp& F) const {
    PolyP r;
    size_t i = 0, j = 0;
    while (i < t.size() && j < o.t.size()) {
      int c = lex_cmp(t[i].m, o.t[j].m);
      if (c > 0) {
        r.t.push_back(t[i++]);
      } else if (c < 0) {
        r.t.push_back(o.t[j++]);
      } else {
        uint64_t s = F.add(t[i].c, o.t[j].c);
        if (s) r.t.push_back({t[i].m, s});
        ++i;
        ++j;
      }
    }
    while (i < t.size()) r.t.push_back(t[i++]);
    while (j < o.t.size()) r.t.push_back(o.t[j++]);
    return r;
  }
  PolyP sub(const PolyP& o, const Fp& F) const {
    PolyP n = o;
    for (auto& x : n.t) x.c = F.neg(x.c);
    return add(n, F);
  }

  struct Item {
    Mono m;
    uint32_t i, j;
  };
  struct ItemLess {
    bool operator()(const Item& a, const Item& b) const { return lex_cmp(a.m, b.m) < 0; }
  };

  PolyP mul(const PolyP& o, const Fp& F) const {
    PolyP r;
    if (t.empty() || o.t.empty()) return r;
    const PolyP& A = t.size() <= o.t.size() ? *this : o;
    const PolyP& B = t.size() <= o.t.size() ? o : *this;
    std::priority_queue<Item, std::vector<Item>, ItemLess> heap;
    heap.push({A.t[0].m * B.t[0].m, 0, 0});
    while (!heap.empty()) {
      Mono cur = heap.top().m;
      uint64_t acc = 0;
      while (!heap.empty() && heap.top().m == cur) {
        Item it = heap.top();
        heap.pop();
        acc = F.add(acc, F.mul(A.t[it.i].c, B.t[it.j].c));
        if (it.j == 0 && it.i + 1 < A.t.size()) heap.push({A.t[it.i + 1].m * B.t[0].m, it.i + 1, 0});
        if (it.j + 1 < B.t.size()) heap.push({A.t[it.i].m * B.t[it.j + 1].m, it.i, it.j + 1});
      }
      if (acc) r.t.push_back({cur, acc});
    }
    return r;
  }

  // exact division test; quotient in *q
  bool try_div(const PolyP& B, const Fp& F, PolyP* q) const {
    PolyP Q;
    const TermP& lb = B.t[0];
    uint64_t linv = F.inv(lb.c);
    std::priority_queue<Item, std::vector<Item>, ItemLess> heap;
    size_t k = 0;
    for (;;) {
      bool have_a = k < t.size();
      if (!have_a && heap.empty()) break;
      Mono cur;
      if (have_a && (heap.empty() || lex_cmp(t[k].m, heap.top().m) >= 0))
        cur = t[k].m;
      else
        cur = heap.top().m;
      uint64_t acc = 0;
      if (have_a && t[k].m == cur) acc = t[k++].c;
      while (!heap.empty() && heap.top().m == cur) {
        Item it = heap.top();
        heap.pop();
        acc = F.sub(acc, F.mul(Q.t[it.i].c, B.t[it.j].c));
        if (it.j + 1 < B.t.size()) heap.push({Q.t[it.i].m * B.t[it.j + 1].m, it.i, it.j + 1});
      }
      if (!acc) continue;
      if (!cur.divisible_by(lb.m)) return false;
      Mono qm = cur / lb.m;
      Q.t.push_back({qm, F.mul(acc, linv)});
      if (B.t.size() > 1)
        heap.push({qm * B.t[1].m, static_cast<uint32_t>(Q.t.size() - 1), 1});
    }
    if (q) *q = std::move(Q);
    return true;
  }
  PolyP div_exact(const PolyP& B, const Fp& F) const {
    PolyP q;
    try_div(B, F, &q);
    return q;
  }
};

}  // namespace mukade::detail
