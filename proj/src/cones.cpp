#include "colorful/cones.hpp"

#include <optional>

namespace colorful {

namespace {

VecX combine(const std::vector<Ray>& gens, const std::vector<Rational>& coeffs) {
  VecX acc = VecX::Zero(gens.front().dim());
  for (std::size_t k = 0; k < gens.size(); ++k) acc += coeffs[k] * gens[k].vec();
  return acc;
}

bool all_positive(const std::vector<Rational>& xs) {
  for (const auto& x : xs)
    if (x.sign() <= 0) return false;
  return true;
}

void check_cone(const Cone& c) {
  if (c.generators.empty()) throw std::invalid_argument("cone needs at least one generator");
  for (const Ray& r : c.generators)
    if (r.dim() != c.dim()) throw std::invalid_argument("cone generators differ in dimension");
}

}  // namespace

bool ConeWitness::verify(const Cone& v, const Cone& u) const {
  if (lambda.size() != v.generators.size() || mu.size() != u.generators.size()) return false;
  if (!all_positive(lambda) || !all_positive(mu)) return false;
  const VecX lhs = combine(v.generators, lambda);
  if (lhs != combine(u.generators, mu) || is_zero_vector(lhs)) return false;
  return Ray(lhs) == eta;
}

LinearSystem<Rational> cone_meet_system(const Cone& v, const Cone& u) {
  check_cone(v);
  check_cone(u);
  if (v.dim() != u.dim()) throw std::invalid_argument("cones live in different dimensions");
  const auto r = static_cast<Eigen::Index>(v.generators.size());
  const auto s = static_cast<Eigen::Index>(u.generators.size());
  LinearSystem<Rational> sys(r + s);
  for (Eigen::Index c = 0; c < v.dim(); ++c) {
    VecX row(r + s);
    for (Eigen::Index k = 0; k < r; ++k) row(k) = v.generators[static_cast<std::size_t>(k)].vec()(c);
    for (Eigen::Index k = 0; k < s; ++k) row(r + k) = -u.generators[static_cast<std::size_t>(k)].vec()(c);
    sys.add_eq(std::move(row), 0);
  }
  for (Eigen::Index k = 0; k < r + s; ++k) sys.add_bound(k, 1, Relation::GreaterEqual, 1);
  return sys;
}

ConeResult cones_intersect(const Cone& v, const Cone& u) {
  const LinearSystem<Rational> sys = cone_meet_system(v, u);
  const std::size_t r = v.generators.size();

  auto split = [&](const VecX& w, std::vector<Rational>& lambda, std::vector<Rational>& mu) {
    lambda.assign(w.data(), w.data() + r);
    mu.assign(w.data() + r, w.data() + w.size());
  };

  auto first = lp_solve(sys);
  if (auto* inf = std::get_if<Infeasible<Rational>>(&first)) return ConesDisjoint{std::move(inf->cert)};

  std::vector<Rational> lambda, mu;
  split(std::get<Feasible<Rational>>(first).witness, lambda, mu);
  VecX eta = combine(v.generators, lambda);
  if (!is_zero_vector(eta)) return ConesIntersect{ConeWitness{Ray(eta), lambda, mu}};

  // The only solution found sums to the origin; look for a nonzero one
  // along each signed coordinate.
  for (Eigen::Index c = 0; c < v.dim(); ++c) {
    for (int sgn : {1, -1}) {
      LinearSystem<Rational> probe = sys;
      VecX row = VecX::Zero(sys.num_vars());
      for (std::size_t k = 0; k < r; ++k) row(static_cast<Eigen::Index>(k)) = sgn * v.generators[k].vec()(c);
      probe.add_ge(std::move(row), 1);
      auto res = lp_solve(probe);
      if (auto* f = std::get_if<Feasible<Rational>>(&res)) {
        std::vector<Rational> l2, m2;
        split(f->witness, l2, m2);
        return ConesIntersect{ConeWitness{Ray(combine(v.generators, l2)), l2, m2}};
      }
    }
  }
  return ConesApexOnly{lambda, mu};
}

std::array<Arc, 9> SphereDrawing::arcs() const {
  std::array<Arc, 9> out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[3 * i + j] = Arc{i, j};
  return out;
}

SphereDrawing build_drawing(const std::array<Ray, 3>& blue, const std::array<Ray, 3>& red) {
  std::array<const Ray*, 6> all = {&blue[0], &blue[1], &blue[2], &red[0], &red[1], &red[2]};
  for (const Ray* r : all)
    if (r->dim() != 3) throw DegenerateDrawing("drawing rays must live in E^3");
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = s + 1; t < 6; ++t)
      if (*all[s] == *all[t]) throw DegenerateDrawing("coincident rays " + to_string(*all[s]));
  for (const Ray& b : blue)
    for (const Ray& r : red)
      if (b.is_antipodal_to(r)) throw DegenerateDrawing("antipodal blue/red rays " + to_string(b));
  return SphereDrawing{blue, red};
}

SphereDrawing build_drawing(const std::array<SeparationCert, 3>& blue_certs,
                            const std::array<SeparationCert, 3>& red_certs) {
  return build_drawing(std::array<Ray, 3>{blue_certs[0].half.normal, blue_certs[1].half.normal,
                                          blue_certs[2].half.normal},
                       std::array<Ray, 3>{red_certs[0].half.normal, red_certs[1].half.normal,
                                          red_certs[2].half.normal});
}

bool CrossingWitness::verify(const SphereDrawing& d) const {
  if (first.shares_endpoint(second)) return false;
  return witness.verify(d.arc_cone(first), d.arc_cone(second));
}

std::vector<std::pair<Arc, Arc>> disjoint_arc_pairs() {
  std::vector<std::pair<Arc, Arc>> out;
  for (std::size_t s = 0; s < 9; ++s) {
    for (std::size_t t = s + 1; t < 9; ++t) {
      const Arc a{s / 3, s % 3};
      const Arc b{t / 3, t % 3};
      if (!a.shares_endpoint(b)) out.emplace_back(a, b);
    }
  }
  return out;
}

CrossingResult find_crossing(const SphereDrawing& d) {
  for (const auto& [a, b] : disjoint_arc_pairs()) {
    auto r = cones_intersect(d.arc_cone(a), d.arc_cone(b));
    if (auto* hit = std::get_if<ConesIntersect>(&r)) return CrossingWitness{a, b, std::move(hit->witness)};
  }
  return NoCrossing{d};
}

}  // namespace colorful
