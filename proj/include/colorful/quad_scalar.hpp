#ifndef COLORFUL_QUAD_SCALAR_HPP
#define COLORFUL_QUAD_SCALAR_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "colorful/scalar.hpp"

namespace colorful {

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt d).
///
/// The radicand d is never a rational square, so the representation is
/// unique and a + b*sqrt(d) == 0 iff a == b == 0. Rational values carry
/// d == 0. Two irrational operands must share the same radicand; mixing
/// radicands throws std::domain_error.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(const Rational& a, const Rational& b, const Rational& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  /// Exact sign of a + b*sqrt(d).
  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Conjugate a - b*sqrt(d).
  QuadScalar conjugate() const;
  /// Numeric value; for display and test oracles only.
  double to_double() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) { return (x - y).is_zero(); }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }
  friend bool operator<(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

 private:
  void normalize();
  static Rational common_radicand(const QuadScalar& x, const QuadScalar& y);

  Rational a_;
  Rational b_;
  Rational d_;
};

inline int sign_of(const QuadScalar& x) { return x.sign(); }
inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }
inline QuadScalar abs(const QuadScalar& x) { return x.sign() < 0 ? -x : x; }

std::string to_string(const QuadScalar& x);

}  // namespace colorful

namespace Eigen {

template <>
struct NumTraits<colorful::QuadScalar> : GenericNumTraits<colorful::QuadScalar> {
  using Real = colorful::QuadScalar;
  using NonInteger = colorful::QuadScalar;
  using Literal = colorful::QuadScalar;
  using Nested = colorful::QuadScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 6,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // COLORFUL_QUAD_SCALAR_HPP
