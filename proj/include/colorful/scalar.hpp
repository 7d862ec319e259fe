#ifndef COLORFUL_SCALAR_HPP
#define COLORFUL_SCALAR_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>
#include <Eigen/Geometry>

namespace colorful {

// Exact field used everywhere a decision is made. Expression templates are
// disabled so the type composes cleanly with Eigen's own expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <class K>
using Vec3T = Eigen::Matrix<K, 3, 1>;
template <class K>
using VecXT = Eigen::Matrix<K, Eigen::Dynamic, 1>;
template <class K>
using MatXT = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;

using Vec3 = Vec3T<Rational>;
using VecX = VecXT<Rational>;
using MatX = MatXT<Rational>;

inline int sign_of(const Rational& x) { return x.sign(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

template <class Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

inline Rational numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Rational denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Canonical "p/q" encoding with q > 0, always carrying the slash.
std::string to_string(const Rational& x);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// True when x = r^2 for some rational r (x >= 0).
bool is_rational_square(const Rational& x);

/// Exact square root of a rational square.
Rational rational_sqrt(const Rational& x);

inline Vec3 vec3(const Rational& x, const Rational& y, const Rational& z) {
  Vec3 v;
  v << x, y, z;
  return v;
}

inline Vec3 to_vec3(const VecX& v) { return Vec3(v(0), v(1), v(2)); }
inline VecX to_vecx(const Vec3& v) {
  VecX out(3);
  out << v(0), v(1), v(2);
  return out;
}

}  // namespace colorful

#endif  // COLORFUL_SCALAR_HPP
