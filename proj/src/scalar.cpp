#include "colorful/scalar.hpp"

#include <gmp.h>

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "colorful/quad_scalar.hpp"

namespace colorful {

std::string to_string(const Rational& x) {
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

bool is_integer_square(const Integer& n) {
  return n.sign() >= 0 && mpz_perfect_square_p(n.backend().data()) != 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool is_rational_square(const Rational& x) {
  if (x.sign() < 0) return false;
  return is_integer_square(Integer(numerator_of(x))) && is_integer_square(Integer(denominator_of(x)));
}

Rational rational_sqrt(const Rational& x) {
  if (!is_rational_square(x)) throw std::domain_error("rational_sqrt of a non-square");
  return Rational(boost::multiprecision::sqrt(Integer(numerator_of(x))),
                  boost::multiprecision::sqrt(Integer(denominator_of(x))));
}

// ---------------------------------------------------------------------------

QuadScalar::QuadScalar(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
  if (d_.sign() < 0) throw std::domain_error("QuadScalar radicand must be non-negative");
  normalize();
}

void QuadScalar::normalize() {
  if (b_.is_zero() || d_.is_zero()) {
    b_ = 0;
    d_ = 0;
    return;
  }
  if (is_rational_square(d_)) {
    a_ += b_ * rational_sqrt(d_);
    b_ = 0;
    d_ = 0;
  }
}

Rational QuadScalar::common_radicand(const QuadScalar& x, const QuadScalar& y) {
  if (x.d_.is_zero()) return y.d_;
  if (y.d_.is_zero() || x.d_ == y.d_) return x.d_;
  throw std::domain_error("QuadScalar operands live in different quadratic fields");
}

int QuadScalar::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against b^2 d; equality is impossible since d is not a square.
  return (a_ * a_ > b_ * b_ * d_) ? sa : sb;
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

double QuadScalar::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  d_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  const Rational d = common_radicand(*this, o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * d;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = b_.is_zero() ? Rational(0) : d;
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) throw std::domain_error("QuadScalar division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
  *this *= o.conjugate();
  a_ /= norm;
  b_ /= norm;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << to_string(x); }

std::string to_string(const QuadScalar& x) {
  if (x.is_rational()) return to_string(x.a());
  return to_string(x.a()) + " + " + to_string(x.b()) + "*sqrt(" + to_string(x.d()) + ")";
}

}  // namespace colorful
