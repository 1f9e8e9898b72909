#pragma once

// Slopes of curves on a torus: extended rationals p/q in Q ∪ {∞}, stored in
// the unique normal form gcd(|p|, q) = 1, q >= 0, with ∞ = 1/0. 0/0 is
// rejected. All arithmetic is exact; intermediates run through __int128.

#include "ctsurg/exact.hpp"

#include <iosfwd>
#include <string>

namespace ctsurg {

class Slope {
 public:
  Slope() : p_(0), q_(1) {}
  // Normalizes; throws input_error on 0/0 or components beyond 2^62.
  Slope(i64 num, i64 den);

  static Slope infinity() { return Slope(1, 0); }

  i64 p() const { return p_; }
  i64 q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integer() const { return q_ == 1; }
  bool is_zero() const { return p_ == 0 && q_ == 1; }
  // Sign of the rational; ∞ has no sign and returns +1 by convention of the
  // boundary circle (it separates the positive and negative slopes).
  int sign() const { return p_ > 0 ? 1 : (p_ < 0 ? -1 : 0); }

  Rational as_rational() const;  // throws input_error on ∞

  friend bool operator==(const Slope& a, const Slope& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

 private:
  i64 p_, q_;
};

// 2x2 determinant of the homology vectors: p_a*q_b - q_a*p_b.
inline i128 cross(const Slope& a, const Slope& b) {
  return static_cast<i128>(a.p()) * b.q() - static_cast<i128>(a.q()) * b.p();
}

// Numeric order on Q ∪ {∞} with ∞ greatest; used for display ordering.
bool numeric_less(const Slope& a, const Slope& b);

// Compare numerically against an integer: sign of (s - n). ∞ counts as +∞.
int compare(const Slope& s, i64 n);

// Accepts "p/q", "p", and "inf"; throws input_error otherwise.
Slope parse_slope(const std::string& text);

// Human form ("3", "-1/2", "inf").
std::string to_string(const Slope& s);
// Canonical "p/q" (∞ -> "1/0"); the machine-readable rendering.
std::string frac_string(const Slope& s);

std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace ctsurg
