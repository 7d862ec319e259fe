#ifndef COLORFUL_CONVEX_HPP
#define COLORFUL_CONVEX_HPP

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "colorful/geometry.hpp"
#include "colorful/lp.hpp"

namespace colorful {

/// Convex hull of a nonempty vertex list. Repeated vertices are allowed.
struct ConvexBody {
  std::vector<Vec3> vertices;

  std::size_t size() const { return vertices.size(); }
};

struct Triangle {
  std::array<Vec3, 3> v;

  ConvexBody body() const { return ConvexBody{{v[0], v[1], v[2]}}; }
  /// Twice the vector area; zero iff the vertices are collinear.
  Vec3 area_vector() const { return (v[1] - v[0]).cross(v[2] - v[0]); }
  bool degenerate() const { return is_zero_vector(area_vector()); }
};

/// Open halfspace { x : normal . x > offset } in any dimension.
struct AnchoredHalfspace {
  Ray normal;
  Rational offset;

  template <class Derived>
  Rational slack(const Eigen::MatrixBase<Derived>& x) const {
    Rational s = -offset;
    for (Eigen::Index i = 0; i < normal.dim(); ++i) s += normal.vec()(i) * x(i);
    return s;
  }
  template <class Derived>
  bool contains(const Eigen::MatrixBase<Derived>& x) const {
    return sign_of(slack(x)) > 0;
  }
};

/// Exact point common to two hulls, with convex weights on each vertex list.
struct CommonPoint {
  Vec3 point;
  std::vector<Rational> weights_p;
  std::vector<Rational> weights_q;
};

struct Disjoint {
  FarkasCert<Rational> cert;
};

using IntersectResult = std::variant<CommonPoint, Disjoint>;

/// True when weights are a convex combination of body's vertices equal to point.
bool verify_convex_combination(const ConvexBody& body, const std::vector<Rational>& weights, const Vec3& point);
bool verify_common_point(const ConvexBody& p, const ConvexBody& q, const CommonPoint& w);

IntersectResult bodies_intersect(const ConvexBody& p, const ConvexBody& q);

struct SeparationCert {
  AnchoredHalfspace half;
  ConvexBody inside;
  ConvexBody outside;
  std::vector<Rational> inside_margins;   // normal.v - offset, all > 0
  std::vector<Rational> outside_margins;  // normal.v - offset, all < 0

  /// Recomputes every slack from scratch.
  bool verify() const;
};

struct NotSeparable {
  CommonPoint witness;
};

using SeparationResult = std::variant<SeparationCert, NotSeparable>;

/// Strict separation: p inside the open halfspace, q inside the open
/// complement. The offset sits at the midpoint of the certified slack gap.
SeparationResult separate_bodies(const ConvexBody& p, const ConvexBody& q);

ConvexBody hull_union(const ConvexBody& p, const ConvexBody& q);

struct FullPattern {
  std::array<SeparationCert, 3> certs;
};

/// Body `index` meets the hull of the other two (in increasing index order).
struct PatternFails {
  std::size_t index;
  CommonPoint witness;
};

using PatternResult = std::variant<FullPattern, PatternFails>;

PatternResult separation_pattern(const std::array<ConvexBody, 3>& bodies);

inline bool holds(const PatternResult& r) { return std::holds_alternative<FullPattern>(r); }

/// 3x3 matrix of points: row i is blue triangle i, column j is red triangle j.
struct ColorConfig {
  std::array<std::array<Vec3, 3>, 3> matrix;

  Triangle blue(std::size_t i) const { return Triangle{{matrix[i][0], matrix[i][1], matrix[i][2]}}; }
  Triangle red(std::size_t j) const { return Triangle{{matrix[0][j], matrix[1][j], matrix[2][j]}}; }
  std::array<ConvexBody, 3> blue_bodies() const;
  std::array<ConvexBody, 3> red_bodies() const;

  friend bool operator==(const ColorConfig& a, const ColorConfig& b) { return a.matrix == b.matrix; }
};

/// Name of matrix entry (i, j): a alpha x / b beta y / c gamma z.
const std::string& entry_label(std::size_t row, std::size_t col);

struct DegeneracyFlags {
  std::array<bool, 3> blue_collinear{};
  std::array<bool, 3> red_collinear{};
  bool repeated_points = false;

  bool any() const;
};

struct ConfigReport {
  ColorConfig config;
  std::array<Triangle, 3> blue;
  std::array<Triangle, 3> red;
  DegeneracyFlags flags;
};

ConfigReport build_config(const std::array<std::array<Vec3, 3>, 3>& matrix);

}  // namespace colorful

#endif  // COLORFUL_CONVEX_HPP
