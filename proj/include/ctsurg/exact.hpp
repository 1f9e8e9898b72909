#pragma once

// Exact arithmetic layer: arbitrary-precision integers and rationals with
// plain value semantics, Eigen dense-type aliases over them, and the checked
// 64-bit helpers used by the slope layer. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctsurg {

using Integer = boost::multiprecision::cpp_int;
using i64 = std::int64_t;
using i128 = __int128;

// A documented precondition was violated (bad coefficient, malformed file,
// non-neighbor mediant, ...). The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two verdict rules fired with contradictory conclusions: the fact table or
// the rule engine is wrong. Never silently overridden; CLI exit code 3.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Exact rational with value semantics. Wraps boost cpp_rational behind plain
// operators returning Rational, which keeps Eigen's scalar-promotion probes
// away from boost's converting-constructor templates (those hard-error when
// asked about Eigen expression types).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(i64 n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : v_(n) {}
  Rational(i64 num, i64 den) : v_(num, den) {}
  Rational(const Integer& num, const Integer& den) : v_(num, den) {}

  Integer num() const { return numerator(v_); }
  Integer den() const { return denominator(v_); }
  bool is_integer() const { return denominator(v_) == 1; }
  int sign() const { return v_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_.is_zero()) throw input_error("rational division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "num/den" with the canonical positive denominator, e.g. "0/1", "-1/4".
  std::string frac_str() const { return numerator(v_).str() + "/" + denominator(v_).str(); }
  // Human form: integers print bare, everything else as num/den.
  std::string str() const { return is_integer() ? numerator(v_).str() : frac_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

using IntMatrix = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<i64, Eigen::Dynamic, 1>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rational>;
using RatVector = DenseVector<Rational>;

// Narrowing with an explicit failure instead of wraparound.
i64 checked_i64(i128 v, const char* what);

// Floor division, exact for any sign combination, b != 0.
constexpr i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  i128 r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Integer square root: largest s with s*s <= n.
std::uint64_t isqrt(std::uint64_t n);

std::string to_string(const Integer& n);

}  // namespace ctsurg

namespace Eigen {

template <>
struct NumTraits<ctsurg::Rational> : GenericNumTraits<ctsurg::Rational> {
  typedef ctsurg::Rational Real;
  typedef ctsurg::Rational NonInteger;
  typedef ctsurg::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 40,
  };
};

}  // namespace Eigen
