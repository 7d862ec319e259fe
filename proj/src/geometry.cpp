#include "colorful/geometry.hpp"

#include <algorithm>

namespace colorful {

int orientation(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& s) {
  const Vec3 u = q - p;
  const Vec3 v = r - p;
  const Vec3 w = s - p;
  return sign_of(u.dot(v.cross(w)));
}

Ray::Ray(const VecX& v) : v_(v.size()) {
  if (is_zero_vector(v)) throw ZeroVector();
  Integer lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator_of(v(i))));
  Integer g = 0;
  std::vector<Integer> scaled(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    scaled[static_cast<std::size_t>(i)] = Integer(numerator_of(v(i) * Rational(lcm_den)));
    g = boost::multiprecision::gcd(g, scaled[static_cast<std::size_t>(i)]);
  }
  g = boost::multiprecision::abs(g);
  for (Eigen::Index i = 0; i < v.size(); ++i) v_(i) = Rational(scaled[static_cast<std::size_t>(i)] / g);
}

bool operator<(const Ray& x, const Ray& y) {
  if (x.dim() != y.dim()) return x.dim() < y.dim();
  for (Eigen::Index i = 0; i < x.dim(); ++i) {
    if (x.v_(i) != y.v_(i)) return x.v_(i) < y.v_(i);
  }
  return false;
}

std::string to_string(const Ray& r) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < r.dim(); ++i) {
    if (i) out += ",";
    out += numerator_of(r.vec()(i)).str();
  }
  return out + ")";
}

}  // namespace colorful
