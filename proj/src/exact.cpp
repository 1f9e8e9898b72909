#include "ctsurg/exact.hpp"

#include <ostream>

namespace ctsurg {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

i64 checked_i64(i128 v, const char* what) {
  constexpr i128 lo = std::numeric_limits<i64>::min();
  constexpr i128 hi = std::numeric_limits<i64>::max();
  if (v < lo || v > hi) throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
  return static_cast<i64>(v);
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t x = n;
  std::uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  // x = floor(sqrt(n)) after Newton converges from above
  while (x > 0 && x > n / x) --x;
  while ((x + 1) <= n / (x + 1)) ++x;
  return x;
}

std::string to_string(const Integer& n) { return n.str(); }

}  // namespace ctsurg
