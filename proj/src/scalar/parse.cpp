#include <cctype>
#include <stdexcept>

#include "mukade/scalar.hpp"

namespace mukade {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Scalar run() {
    Scalar r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return r;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar r;
    bool first = true;
    for (;;) {
      char c = peek();
      if (first) {
        r = term();
        first = false;
      } else if (c == '+') {
        ++pos_;
        r += term();
      } else if (c == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  bool starts_primary(char c) const {
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  Scalar term() {
    Scalar r = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r *= unary();
      } else if (c == '/') {
        ++pos_;
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else if (starts_primary(c)) {
        r *= power();
      } else {
        return r;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long integer_exponent() {
    bool paren = eat('(');
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    skip();
    size_t st = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (st == pos_) fail("expected integer exponent");
    long v = std::stol(s_.substr(st, pos_ - st));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -v : v;
  }

  Scalar power() {
    Scalar b = primary();
    if (eat('^')) {
      long e = integer_exponent();
      if (e < 0 && b.is_zero()) fail("zero to a negative power");
      return b.pow(e);
    }
    return b;
  }

  Scalar primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar a = expr();
      if (eat(';')) {
        Scalar base = expr();
        if (!eat(')')) fail("expected ')'");
        if (!eat('_')) fail("expected '_' after Pochhammer symbol");
        long m = integer_exponent();
        return qpoch_base(a, base, m);
      }
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpz_class(s_.substr(st, pos_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t st = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      // a trailing '_' belongs to a Pochhammer suffix, never to a name
      while (pos_ > st && s_[pos_ - 1] == '_') --pos_;
      std::string name = s_.substr(st, pos_ - st);
      if (name == "q") return Scalar::q();
      if (name == "t") return Scalar::t();
      if (name == "gamma") return Scalar::gamma();
      int idx = Symbols::index(name);
      if (idx < 0) {
        pos_ = st;
        fail("unknown symbol '" + name + "'");
      }
      return Scalar::var(idx);
    }
    fail("unexpected character");
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text) { return Parser(text).run(); }

}  // namespace mukade
