#ifndef COLORFUL_PLUCKER_HPP
#define COLORFUL_PLUCKER_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "colorful/convex.hpp"
#include "colorful/lp.hpp"
#include "colorful/quad_scalar.hpp"
#include "colorful/scalar.hpp"

namespace colorful {

/// Line with direction d and moment m = p x d for any point p on it.
template <class K>
struct PluckerLine {
  Vec3T<K> d;
  Vec3T<K> m;

  static PluckerLine through(const Vec3T<K>& p, const Vec3T<K>& q) {
    const Vec3T<K> dir = q - p;
    return PluckerLine{dir, p.cross(dir)};
  }

  /// d != 0 and d . m == 0.
  bool valid() const { return !is_zero_vector(d) && is_zero(d.dot(m)); }

  /// Point of the line closest to the origin.
  Vec3T<K> point() const { return d.cross(m) / d.dot(d); }

  template <class Derived>
  bool contains(const Eigen::MatrixBase<Derived>& x) const {
    return x.cross(d) == m;
  }

  template <class K2>
  PluckerLine<K2> cast() const {
    return PluckerLine<K2>{d.template cast<K2>(), m.template cast<K2>()};
  }
};

/// Permuted inner product; zero iff the lines are coplanar.
template <class K>
K side(const PluckerLine<K>& a, const PluckerLine<K>& b) {
  return a.d.dot(b.m) + b.d.dot(a.m);
}

/// Convex weights on a body's vertices whose combination lies on the line.
template <class K>
struct StabProof {
  std::vector<K> weights;
};

template <class K>
struct Miss {
  FarkasCert<K> cert;
};

template <class K>
using StabResult = std::variant<StabProof<K>, Miss<K>>;

template <class K>
Vec3T<K> combination_point(const ConvexBody& body, const std::vector<K>& weights) {
  Vec3T<K> x = Vec3T<K>::Zero();
  for (std::size_t k = 0; k < weights.size(); ++k) x += weights[k] * body.vertices[k].template cast<K>();
  return x;
}

template <class K>
bool verify_stab(const PluckerLine<K>& line, const ConvexBody& body, const StabProof<K>& proof) {
  if (proof.weights.size() != body.size()) return false;
  K total(0);
  for (const K& w : proof.weights) {
    if (sign_of(w) < 0) return false;
    total += w;
  }
  return total == K(1) && line.contains(combination_point(body, proof.weights));
}

/// The LP whose infeasibility a Miss certifies: variables are the vertex
/// weights followed by the line parameter t, with
/// sum w v - t d = line.point(), sum w = 1, w >= 0.
template <class K>
LinearSystem<K> stab_system(const PluckerLine<K>& line, const ConvexBody& body) {
  const auto n = static_cast<Eigen::Index>(body.size());
  LinearSystem<K> sys(n + 1);
  const Vec3T<K> p0 = line.point();
  for (int c = 0; c < 3; ++c) {
    VecXT<K> row(n + 1);
    for (Eigen::Index k = 0; k < n; ++k) row(k) = K(body.vertices[static_cast<std::size_t>(k)](c));
    row(n) = -line.d(c);
    sys.add_eq(std::move(row), p0(c));
  }
  VecXT<K> sum = VecXT<K>::Zero(n + 1);
  for (Eigen::Index k = 0; k < n; ++k) sum(k) = K(1);
  sys.add_eq(std::move(sum), K(1));
  for (Eigen::Index k = 0; k < n; ++k) sys.add_bound(k, K(1), Relation::GreaterEqual, K(0));
  return sys;
}

/// Exact line/hull incidence decided by LP. Touching counts as meeting.
template <class K>
StabResult<K> line_meets_body(const PluckerLine<K>& line, const ConvexBody& body) {
  if (!line.valid()) throw std::invalid_argument("line_meets_body: invalid Plücker line");
  if (body.vertices.empty()) throw std::invalid_argument("line_meets_body: empty body");
  auto r = lp_solve(stab_system(line, body));
  if (auto* inf = std::get_if<Infeasible<K>>(&r)) return Miss<K>{std::move(inf->cert)};
  const VecXT<K>& w = std::get<Feasible<K>>(r).witness;
  StabProof<K> proof;
  proof.weights.assign(w.data(), w.data() + body.size());
  return proof;
}

/// Side-product test against a nondegenerate triangle; falls back to the LP
/// when the line lies in the triangle's plane or the triangle is degenerate.
template <class K>
std::optional<StabProof<K>> stab_triangle(const PluckerLine<K>& line, const Triangle& tri) {
  if (!tri.degenerate()) {
    std::array<K, 3> s;
    bool pos = false, neg = false;
    for (int k = 0; k < 3; ++k) {
      const auto edge = PluckerLine<Rational>::through(tri.v[k], tri.v[(k + 1) % 3]).template cast<K>();
      s[k] = side(line, edge);
      const int sg = sign_of(s[k]);
      pos = pos || sg > 0;
      neg = neg || sg < 0;
    }
    if (pos && neg) return std::nullopt;
    if (pos || neg) {
      // The weight of vertex k is proportional to the side product with the opposite edge.
      const K total = s[0] + s[1] + s[2];
      return StabProof<K>{{s[1] / total, s[2] / total, s[0] / total}};
    }
  }
  auto r = line_meets_body(line, tri.body());
  if (auto* p = std::get_if<StabProof<K>>(&r)) return std::move(*p);
  return std::nullopt;
}

struct DegeneratePencil {};

using FourLineResult = std::variant<std::vector<PluckerLine<QuadScalar>>, DegeneratePencil>;

/// Real lines meeting all four given lines. Coordinates live in Q or in
/// Q(sqrt D) where D is the discriminant of the Plücker quadric restricted
/// to the pencil of incidence solutions.
FourLineResult common_transversals_4lines(const std::array<PluckerLine<Rational>, 4>& lines);

/// Basis of the right nullspace of a rational matrix (exact elimination,
/// least-index pivoting).
std::vector<VecX> nullspace(const MatX& a);

}  // namespace colorful

#endif  // COLORFUL_PLUCKER_HPP
