#ifndef COLORFUL_CONES_HPP
#define COLORFUL_CONES_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "colorful/convex.hpp"
#include "colorful/geometry.hpp"
#include "colorful/lp.hpp"

namespace colorful {

/// Strictly positive span of its generators.
struct Cone {
  std::vector<Ray> generators;

  Eigen::Index dim() const { return generators.front().dim(); }
};

/// sum(lambda_i v_i) == sum(mu_j u_j), a positive multiple of eta, all
/// coefficients strictly positive.
struct ConeWitness {
  Ray eta;
  std::vector<Rational> lambda;
  std::vector<Rational> mu;

  bool verify(const Cone& v, const Cone& u) const;
};

struct ConesIntersect {
  ConeWitness witness;
};

/// Farkas certificate for { sum lambda v - sum mu u = 0, lambda >= 1, mu >= 1 }.
/// Variables are ordered lambda then mu; rows are the dim equalities then
/// the lambda bounds then the mu bounds.
struct ConesDisjoint {
  FarkasCert<Rational> cert;
};

/// Both spans contain the origin and share nothing else.
struct ConesApexOnly {
  std::vector<Rational> lambda;
  std::vector<Rational> mu;
};

using ConeResult = std::variant<ConesIntersect, ConesDisjoint, ConesApexOnly>;

/// The LP whose infeasibility ConesDisjoint certifies.
LinearSystem<Rational> cone_meet_system(const Cone& v, const Cone& u);

ConeResult cones_intersect(const Cone& v, const Cone& u);

inline bool cones_meet(const ConeResult& r) { return std::holds_alternative<ConesIntersect>(r); }

class DegenerateDrawing : public std::runtime_error {
 public:
  explicit DegenerateDrawing(const std::string& what) : std::runtime_error(what) {}
};

/// Minor great-circle arc from blue vertex `blue` to red vertex `red`.
struct Arc {
  std::size_t blue;
  std::size_t red;

  const std::string& label() const { return entry_label(blue, red); }
  bool shares_endpoint(const Arc& o) const { return blue == o.blue || red == o.red; }
  friend bool operator==(const Arc& a, const Arc& b) { return a.blue == b.blue && a.red == b.red; }
};

/// Geodesic drawing of K_{3,3} on the sphere: separation normals as
/// vertices, one arc per matrix entry.
struct SphereDrawing {
  std::array<Ray, 3> blue;
  std::array<Ray, 3> red;

  std::array<Arc, 9> arcs() const;
  Cone arc_cone(const Arc& a) const { return Cone{{blue[a.blue], red[a.red]}}; }
};

/// Throws DegenerateDrawing when two of the six rays coincide or a blue ray
/// is antipodal to a red ray.
SphereDrawing build_drawing(const std::array<Ray, 3>& blue, const std::array<Ray, 3>& red);
SphereDrawing build_drawing(const std::array<SeparationCert, 3>& blue_certs,
                            const std::array<SeparationCert, 3>& red_certs);

struct CrossingWitness {
  Arc first;
  Arc second;
  ConeWitness witness;

  bool verify(const SphereDrawing& d) const;
};

/// Every vertex-disjoint arc pair missed; preserved for inspection.
struct NoCrossing {
  SphereDrawing drawing;
};

using CrossingResult = std::variant<CrossingWitness, NoCrossing>;

/// The 18 vertex-disjoint arc pairs in lexicographic order of labels' grid
/// positions.
std::vector<std::pair<Arc, Arc>> disjoint_arc_pairs();

/// Scans the 18 pairs in order and reports the first crossing.
CrossingResult find_crossing(const SphereDrawing& d);

}  // namespace colorful

#endif  // COLORFUL_CONES_HPP
