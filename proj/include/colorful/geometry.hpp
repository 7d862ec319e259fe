#ifndef COLORFUL_GEOMETRY_HPP
#define COLORFUL_GEOMETRY_HPP

#include <stdexcept>
#include <string>

#include "colorful/scalar.hpp"

namespace colorful {

class ZeroVector : public std::invalid_argument {
 public:
  ZeroVector() : std::invalid_argument("zero vector has no ray") {}
};

/// Sign of det[q-p, r-p, s-p].
int orientation(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& s);

/// Class of nonzero vectors modulo positive scaling, stored as the unique
/// primitive integer representative.
class Ray {
 public:
  /// Canonicalizes v; throws ZeroVector when v == 0.
  explicit Ray(const VecX& v);
  explicit Ray(const Vec3& v) : Ray(to_vecx(v)) {}

  const VecX& vec() const { return v_; }
  Eigen::Index dim() const { return v_.size(); }
  Vec3 vec3() const { return to_vec3(v_); }

  Ray opposite() const { return Ray(VecX(-v_)); }
  bool is_antipodal_to(const Ray& o) const { return o.v_ == -v_; }

  friend bool operator==(const Ray& x, const Ray& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Ray& x, const Ray& y) { return !(x == y); }
  /// Lexicographic order on the primitive representative.
  friend bool operator<(const Ray& x, const Ray& y);

 private:
  VecX v_;
};

inline Ray canonical_ray(const VecX& v) { return Ray(v); }
inline Ray canonical_ray(const Vec3& v) { return Ray(v); }

std::string to_string(const Ray& r);

}  // namespace colorful

#endif  // COLORFUL_GEOMETRY_HPP
