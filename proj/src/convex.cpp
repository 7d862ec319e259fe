#include "colorful/convex.hpp"

#include <stdexcept>

namespace colorful {

bool verify_convex_combination(const ConvexBody& body, const std::vector<Rational>& weights, const Vec3& point) {
  if (weights.size() != body.size()) return false;
  Rational total = 0;
  Vec3 acc = Vec3::Zero();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k].sign() < 0) return false;
    total += weights[k];
    acc += weights[k] * body.vertices[k];
  }
  return total == 1 && acc == point;
}

bool verify_common_point(const ConvexBody& p, const ConvexBody& q, const CommonPoint& w) {
  return verify_convex_combination(p, w.weights_p, w.point) && verify_convex_combination(q, w.weights_q, w.point);
}

// Variables: weights on p's vertices then q's. Rows: the two hulls give the
// same point, each weight vector sums to one, all weights are >= 0.
IntersectResult bodies_intersect(const ConvexBody& p, const ConvexBody& q) {
  if (p.vertices.empty() || q.vertices.empty()) throw std::invalid_argument("empty convex body");
  const auto np = static_cast<Eigen::Index>(p.size());
  const auto nq = static_cast<Eigen::Index>(q.size());
  LinearSystem<Rational> sys(np + nq);
  for (int c = 0; c < 3; ++c) {
    VecX row = VecX::Zero(np + nq);
    for (Eigen::Index k = 0; k < np; ++k) row(k) = p.vertices[static_cast<std::size_t>(k)](c);
    for (Eigen::Index k = 0; k < nq; ++k) row(np + k) = -q.vertices[static_cast<std::size_t>(k)](c);
    sys.add_eq(std::move(row), 0);
  }
  VecX sum_p = VecX::Zero(np + nq);
  VecX sum_q = VecX::Zero(np + nq);
  sum_p.head(np).setOnes();
  sum_q.tail(nq).setOnes();
  sys.add_eq(std::move(sum_p), 1);
  sys.add_eq(std::move(sum_q), 1);
  for (Eigen::Index k = 0; k < np + nq; ++k) sys.add_bound(k, 1, Relation::GreaterEqual, 0);

  auto result = lp_solve(sys);
  if (auto* inf = std::get_if<Infeasible<Rational>>(&result)) return Disjoint{std::move(inf->cert)};
  const VecX& w = std::get<Feasible<Rational>>(result).witness;
  CommonPoint out;
  out.point = Vec3::Zero();
  for (Eigen::Index k = 0; k < np; ++k) {
    out.weights_p.push_back(w(k));
    out.point += w(k) * p.vertices[static_cast<std::size_t>(k)];
  }
  for (Eigen::Index k = 0; k < nq; ++k) out.weights_q.push_back(w(np + k));
  return out;
}

bool SeparationCert::verify() const {
  if (inside_margins.size() != inside.size() || outside_margins.size() != outside.size()) return false;
  for (std::size_t k = 0; k < inside.size(); ++k) {
    const Rational s = half.slack(inside.vertices[k]);
    if (s != inside_margins[k] || s.sign() <= 0) return false;
  }
  for (std::size_t k = 0; k < outside.size(); ++k) {
    const Rational s = half.slack(outside.vertices[k]);
    if (s != outside_margins[k] || s.sign() >= 0) return false;
  }
  return true;
}

// Variables (n, b): n.p - b >= 1 for p's vertices, b - n.q >= 1 for q's.
SeparationResult separate_bodies(const ConvexBody& p, const ConvexBody& q) {
  if (p.vertices.empty() || q.vertices.empty()) throw std::invalid_argument("empty convex body");
  LinearSystem<Rational> sys(4);
  for (const Vec3& v : p.vertices) {
    VecX row(4);
    row << v(0), v(1), v(2), -1;
    sys.add_ge(std::move(row), 1);
  }
  for (const Vec3& v : q.vertices) {
    VecX row(4);
    row << -v(0), -v(1), -v(2), 1;
    sys.add_ge(std::move(row), 1);
  }
  auto result = lp_solve(sys);
  if (std::holds_alternative<Infeasible<Rational>>(result)) {
    auto meet = bodies_intersect(p, q);
    if (auto* cp = std::get_if<CommonPoint>(&meet)) return NotSeparable{std::move(*cp)};
    throw std::logic_error("separation LP and intersection LP disagree");
  }
  const VecX& w = std::get<Feasible<Rational>>(result).witness;
  const Ray normal(to_vec3(w.head(3)));
  // Scaling to the primitive normal is positive, so the gap survives.
  Rational lo = 0, hi = 0;
  bool first = true;
  for (const Vec3& v : p.vertices) {
    const Rational s = normal.vec().dot(to_vecx(v));
    if (first || s < lo) lo = s;
    first = false;
  }
  first = true;
  for (const Vec3& v : q.vertices) {
    const Rational s = normal.vec().dot(to_vecx(v));
    if (first || s > hi) hi = s;
    first = false;
  }
  SeparationCert cert{AnchoredHalfspace{normal, (lo + hi) / 2}, p, q, {}, {}};
  for (const Vec3& v : p.vertices) cert.inside_margins.push_back(cert.half.slack(v));
  for (const Vec3& v : q.vertices) cert.outside_margins.push_back(cert.half.slack(v));
  if (!cert.verify()) throw std::logic_error("separation certificate failed re-verification");
  return cert;
}

ConvexBody hull_union(const ConvexBody& p, const ConvexBody& q) {
  ConvexBody out = p;
  out.vertices.insert(out.vertices.end(), q.vertices.begin(), q.vertices.end());
  return out;
}

PatternResult separation_pattern(const std::array<ConvexBody, 3>& bodies) {
  std::vector<SeparationCert> certs;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i == 0) ? 1 : 0;
    const std::size_t k = (i == 2) ? 1 : 2;
    auto r = separate_bodies(bodies[i], hull_union(bodies[j], bodies[k]));
    if (auto* ns = std::get_if<NotSeparable>(&r)) return PatternFails{i, std::move(ns->witness)};
    certs.push_back(std::move(std::get<SeparationCert>(r)));
  }
  return FullPattern{{std::move(certs[0]), std::move(certs[1]), std::move(certs[2])}};
}

std::array<ConvexBody, 3> ColorConfig::blue_bodies() const { return {blue(0).body(), blue(1).body(), blue(2).body()}; }

std::array<ConvexBody, 3> ColorConfig::red_bodies() const { return {red(0).body(), red(1).body(), red(2).body()}; }

const std::string& entry_label(std::size_t row, std::size_t col) {
  static const std::array<std::array<std::string, 3>, 3> labels = {{
      {"a", "alpha", "x"},
      {"b", "beta", "y"},
      {"c", "gamma", "z"},
  }};
  return labels.at(row).at(col);
}

bool DegeneracyFlags::any() const {
  for (std::size_t i = 0; i < 3; ++i)
    if (blue_collinear[i] || red_collinear[i]) return true;
  return repeated_points;
}

ConfigReport build_config(const std::array<std::array<Vec3, 3>, 3>& matrix) {
  ConfigReport rep{ColorConfig{matrix}, {}, {}, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    rep.blue[i] = rep.config.blue(i);
    rep.red[i] = rep.config.red(i);
    rep.flags.blue_collinear[i] = rep.blue[i].degenerate();
    rep.flags.red_collinear[i] = rep.red[i].degenerate();
  }
  for (std::size_t s = 0; s < 9; ++s)
    for (std::size_t t = s + 1; t < 9; ++t)
      if (matrix[s / 3][s % 3] == matrix[t / 3][t % 3]) rep.flags.repeated_points = true;
  return rep;
}

}  // namespace colorful
