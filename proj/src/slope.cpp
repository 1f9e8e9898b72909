#include "ctsurg/slope.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace ctsurg {

namespace {
constexpr i64 kMaxComponent = i64(1) << 62;
}  // namespace

Slope::Slope(i64 num, i64 den) {
  if (num == 0 && den == 0) throw input_error("slope 0/0 is not a point of the boundary circle");
  if (num <= -kMaxComponent || num >= kMaxComponent || den <= -kMaxComponent || den >= kMaxComponent)
    throw input_error("slope components exceed the supported range");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) {
    p_ = 1;  // ∞ stored as 1/0, never -1/0
    q_ = 0;
    return;
  }
  i64 g = std::gcd(num < 0 ? -num : num, den);
  p_ = num / g;
  q_ = den / g;
}

Rational Slope::as_rational() const {
  if (is_infinite()) throw input_error("the slope at infinity has no rational value");
  return Rational(p_, q_);
}

bool numeric_less(const Slope& a, const Slope& b) {
  if (a == b) return false;
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return static_cast<i128>(a.p()) * b.q() < static_cast<i128>(b.p()) * a.q();
}

int compare(const Slope& s, i64 n) {
  if (s.is_infinite()) return 1;
  i128 lhs = s.p();
  i128 rhs = static_cast<i128>(n) * s.q();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Slope parse_slope(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return Slope::infinity();
  auto parse_int = [&](std::string_view part) -> i64 {
    i64 value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw input_error("cannot parse slope '" + text + "'");
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Slope(parse_int(text), 1);
  return Slope(parse_int(std::string_view(text).substr(0, slash)),
               parse_int(std::string_view(text).substr(slash + 1)));
}

std::string to_string(const Slope& s) {
  if (s.is_infinite()) return "inf";
  if (s.is_integer()) return std::to_string(s.p());
  return std::to_string(s.p()) + "/" + std::to_string(s.q());
}

std::string frac_string(const Slope& s) {
  return std::to_string(s.p()) + "/" + std::to_string(s.q());
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << to_string(s); }

}  // namespace ctsurg
