#pragma once

#include <chrono>
#include <vector>

#include "mukade/regression.hpp"

namespace mukade::detail {

inline std::vector<Scalar> syms(int N, Scalar (*f)(int)) {
  std::vector<Scalar> r;
  for (int i = 1; i <= N; ++i) r.push_back(f(i));
  return r;
}
inline std::vector<Scalar> us(int N) { return syms(N, &Scalar::u); }
inline std::vector<Scalar> vs(int N) { return syms(N, &Scalar::v); }
inline std::vector<Scalar> ws(int N) { return syms(N, static_cast<Scalar (*)(int)>(&Scalar::w)); }

class Timer {
 public:
  explicit Timer(SuiteReport& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  SuiteReport& r_;
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace mukade::detail
