#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace labelcut {

// Vertex and label ids are 1-based everywhere; 0 means "unset".
using NodeId = int;
using LabelId = int;
using Weight = std::int64_t;

// Distance marker for vertices that cannot be reached.
constexpr int kUnreachable = -1;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input rejected, with the 1-based line of the first offense.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Generator parameters that cannot produce an instance.
class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

// Exact solver refused: instance exceeds the exponential-search cap.
class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

// dist^3 * guess <= n^2 * mu, evaluated exactly. All operands must fit in
// 31 bits so the 128-bit products cannot wrap.
inline bool cube_bound_holds(std::int64_t dist, std::int64_t guess,
                             std::int64_t n, std::int64_t mu) {
  assert(dist >= 0 && guess >= 0 && n >= 0 && mu >= 0);
  assert(dist < (1LL << 31) && guess < (1LL << 31));
  assert(n < (1LL << 31) && mu < (1LL << 31));
  using wide = unsigned __int128;
  wide lhs = wide(dist) * wide(dist) * wide(dist) * wide(guess);
  wide rhs = wide(n) * wide(n) * wide(mu);
  return lhs <= rhs;
}

// Largest d >= 0 with d^3 * guess <= n^2 * mu (0 when even d=1 fails).
inline std::int64_t max_distance_under_cube_bound(std::int64_t guess,
                                                  std::int64_t n,
                                                  std::int64_t mu) {
  std::int64_t lo = 0, hi = 1;
  while (hi < (1LL << 30) && cube_bound_holds(hi, guess, n, mu)) hi *= 2;
  // invariant: bound holds at lo, fails at hi (or hi hit the cap)
  while (lo + 1 < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (cube_bound_holds(mid, guess, n, mu))
      lo = mid;
    else
      hi = mid;
  }
  return cube_bound_holds(hi, guess, n, mu) ? hi : lo;
}

}  // namespace labelcut
