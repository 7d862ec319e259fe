#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "colorful/transversal.hpp"
#include "oracles.hpp"

using namespace colorful;
using F50 = boost::multiprecision::cpp_bin_float_50;

namespace {

using Line = PluckerLine<Rational>;

const Line kZAxis{vec3(0, 0, 1), vec3(0, 0, 0)};

ConvexBody tri(const Vec3& a, const Vec3& b, const Vec3& c) { return ConvexBody{{a, b, c}}; }

ConvexBody translated(ConvexBody b, const Vec3& t) {
  for (auto& v : b.vertices) v += t;
  return b;
}

std::array<ConvexBody, 3> random_triple(std::mt19937_64& rng, int spread, int size) {
  std::array<ConvexBody, 3> out;
  for (auto& b : out) {
    const Vec3 c = oracle::random_int_vec3(rng, spread);
    b = tri(c + oracle::random_int_vec3(rng, size), c + oracle::random_int_vec3(rng, size),
            c + oracle::random_int_vec3(rng, size));
  }
  return out;
}

F50 f50(const Rational& x) {
  return F50(boost::multiprecision::numerator(x).str()) / F50(boost::multiprecision::denominator(x).str());
}

F50 f50(const QuadScalar& x) { return f50(x.a()) + f50(x.b()) * boost::multiprecision::sqrt(f50(x.d())); }

template <class K>
Vec3T<F50> to_f50(const Vec3T<K>& v) {
  return Vec3T<F50>(f50(v(0)), f50(v(1)), f50(v(2)));
}

// Two lines as (point, direction) -> side product is zero and the lines are not parallel.
bool meets(const PluckerLine<QuadScalar>& a, const Line& b) { return is_zero(side(a, b.cast<QuadScalar>())); }

// Signed volume f(t) = det[P3 - p(t), n1(t) x n2(t), d3] for p(t) = P4 + t d4:
// the line through p(t) meeting L1 and L2 meets L3 exactly at its roots.
Rational incidence_poly(const std::array<std::pair<Vec3, Vec3>, 4>& pd, const Rational& t) {
  const Vec3 p = pd[3].first + t * pd[3].second;
  const Vec3 n1 = (pd[0].first - p).cross(pd[0].second);
  const Vec3 n2 = (pd[1].first - p).cross(pd[1].second);
  const Vec3 delta = n1.cross(n2);
  return (pd[2].first - p).cross(delta).dot(pd[2].second);
}

}  // namespace

TEST_CASE("z-axis stabs the triangle at the origin") {
  const ConvexBody t = tri(vec3(1, 0, 0), vec3(-1, 1, 0), vec3(-1, -1, 0));
  auto r = line_meets_body(kZAxis, t);
  REQUIRE(std::holds_alternative<StabProof<Rational>>(r));
  const auto& p = std::get<StabProof<Rational>>(r);
  CHECK(verify_stab(kZAxis, t, p));
  CHECK(combination_point(t, p.weights) == vec3(0, 0, 0));
  CHECK(p.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  auto fast = stab_triangle(kZAxis, Triangle{{t.vertices[0], t.vertices[1], t.vertices[2]}});
  REQUIRE(fast);
  CHECK(fast->weights == p.weights);

  const ConvexBody far = translated(t, vec3(5, 0, 0));
  auto miss = line_meets_body(kZAxis, far);
  REQUIRE(std::holds_alternative<Miss<Rational>>(miss));
  CHECK(verify_farkas(stab_system(kZAxis, far), std::get<Miss<Rational>>(miss).cert));
  CHECK_FALSE(stab_triangle(kZAxis, Triangle{{far.vertices[0], far.vertices[1], far.vertices[2]}}));
}

TEST_CASE("touching and coplanar incidences count as meeting") {
  const ConvexBody t = tri(vec3(0, 0, 0), vec3(2, 0, 0), vec3(0, 2, 0));
  CHECK(stab_triangle(kZAxis, Triangle{{t.vertices[0], t.vertices[1], t.vertices[2]}}));  // through a vertex
  const Line through_edge{vec3(0, 0, 1), vec3(0, -1, 0)};                                  // x=1, y=0
  CHECK(through_edge.valid());
  CHECK(std::holds_alternative<StabProof<Rational>>(line_meets_body(through_edge, t)));
  const Line in_plane = Line::through(vec3(-1, 1, 0), vec3(3, 1, 0));
  auto r = stab_triangle(in_plane, Triangle{{t.vertices[0], t.vertices[1], t.vertices[2]}});
  REQUIRE(r);
  CHECK(verify_stab(in_plane, t, *r));
  const Line parallel_off = Line::through(vec3(-1, 1, 1), vec3(3, 1, 1));
  CHECK_FALSE(stab_triangle(parallel_off, Triangle{{t.vertices[0], t.vertices[1], t.vertices[2]}}));
  CHECK_THROWS_AS(line_meets_body(Line{vec3(0, 0, 0), vec3(0, 0, 0)}, t), std::invalid_argument);
}

TEST_CASE("line_meets_body agrees with dense sampling along the line") {
  std::mt19937_64 rng(51);
  int hits = 0, sampled_hits = 0;
  for (int it = 0; it < 300; ++it) {
    ConvexBody tet;
    for (int k = 0; k < 4; ++k) tet.vertices.push_back(oracle::random_int_vec3(rng, 5));
    const Vec3 p = oracle::random_int_vec3(rng, 6), q = oracle::random_int_vec3(rng, 6);
    if (p == q) continue;
    const Line line = Line::through(p, q);
    const auto r = line_meets_body(line, tet);
    if (const auto* proof = std::get_if<StabProof<Rational>>(&r)) {
      ++hits;
      CHECK(verify_stab(line, tet, *proof));
    } else {
      CHECK(verify_farkas(stab_system(line, tet), std::get<Miss<Rational>>(r).cert));
    }
    // Sampling oracle in doubles: 10^4 points over a window covering the body.
    const auto a = oracle::to_double(p), d = oracle::to_double(q - p);
    Eigen::Matrix3d m;
    std::array<double, 3> v0 = oracle::to_double(tet.vertices[0]);
    for (int k = 1; k < 4; ++k) {
      const auto vk = oracle::to_double(tet.vertices[static_cast<std::size_t>(k)]);
      for (int c = 0; c < 3; ++c) m(c, k - 1) = vk[c] - v0[c];
    }
    if (std::abs(m.determinant()) < 1e-9) continue;  // flat tetrahedra are left to the exact checks
    const Eigen::Matrix3d inv = m.inverse();
    bool sampled = false;
    for (int s = 0; s <= 10000 && !sampled; ++s) {
      const double t = -4.0 + 8.0 * s / 10000.0;
      Eigen::Vector3d x;
      for (int c = 0; c < 3; ++c) x(c) = a[c] + t * d[c] - v0[c];
      const Eigen::Vector3d w = inv * x;
      sampled = w.minCoeff() > 1e-9 && w.sum() < 1 - 1e-9;
    }
    if (sampled) {
      ++sampled_hits;
      CHECK(std::holds_alternative<StabProof<Rational>>(r));
    }
  }
  CHECK(hits > 30);
  CHECK(sampled_hits > 20);
}

TEST_CASE("four concurrent lines form a degenerate pencil") {
  const std::array<Line, 4> lines{Line::through(vec3(0, 0, 0), vec3(1, 0, 0)), Line::through(vec3(0, 0, 0), vec3(0, 1, 0)),
                                  Line::through(vec3(0, 0, 0), vec3(0, 0, 1)), Line::through(vec3(0, 0, 0), vec3(1, 2, 3))};
  CHECK(std::holds_alternative<DegeneratePencil>(common_transversals_4lines(lines)));
}

TEST_CASE("two intersecting pairs: the joining line and the planes' meet") {
  std::mt19937_64 rng(52);
  int checked = 0;
  for (int it = 0; it < 200 && checked < 60; ++it) {
    const Vec3 x = oracle::random_int_vec3(rng, 9), y = oracle::random_int_vec3(rng, 9);
    const Vec3 d1 = oracle::random_int_vec3(rng, 5), d2 = oracle::random_int_vec3(rng, 5);
    const Vec3 d3 = oracle::random_int_vec3(rng, 5), d4 = oracle::random_int_vec3(rng, 5);
    const std::array<Line, 4> lines{Line{d1, x.cross(d1)}, Line{d2, x.cross(d2)}, Line{d3, y.cross(d3)},
                                    Line{d4, y.cross(d4)}};
    bool ok = x != y;
    for (const auto& l : lines) ok = ok && l.valid();
    const Vec3 n12 = d1.cross(d2), n34 = d3.cross(d4);
    ok = ok && !is_zero_vector(n12) && !is_zero_vector(n34) && !is_zero_vector(n12.cross(n34));
    ok = ok && !is_zero(n12.dot(y - x)) && !is_zero(n34.dot(x - y));  // neither point on the other plane
    if (!ok) continue;
    ++checked;
    const Line join = Line::through(x, y);
    // Plane through x with normal n12 meets plane through y with normal n34.
    const Vec3 dir = n12.cross(n34);
    Eigen::Matrix<Rational, 3, 3> rows;
    rows << n12.transpose(), n34.transpose(), dir.transpose();
    const Vec3 pt = rows.inverse() * vec3(n12.dot(x), n34.dot(y), 0);
    const Line meet{dir, pt.cross(dir)};
    auto r = common_transversals_4lines(lines);
    REQUIRE(std::holds_alternative<std::vector<PluckerLine<QuadScalar>>>(r));
    const auto& sols = std::get<0>(r);
    CHECK(sols.size() == 2);
    auto same = [](const PluckerLine<QuadScalar>& s, const Line& l) {
      const auto lq = l.cast<QuadScalar>();
      return is_zero_vector(Vec3T<QuadScalar>(s.d.cross(lq.d))) && s.contains(lq.point());
    };
    int found_join = 0, found_meet = 0;
    for (const auto& s : sols) {
      CHECK(s.valid());
      for (const auto& l : lines) CHECK(meets(s, l));
      found_join += same(s, join);
      found_meet += same(s, meet);
    }
    CHECK(found_join == 1);
    CHECK(found_meet == 1);
  }
  CHECK(checked >= 40);
}

TEST_CASE("four-line transversals match a 50-digit root solve") {
  std::mt19937_64 rng(53);
  int irrational = 0, with_roots = 0;
  for (int it = 0; it < 300; ++it) {
    std::array<std::pair<Vec3, Vec3>, 4> pd;
    std::array<Line, 4> lines;
    bool ok = true;
    for (std::size_t k = 0; k < 4; ++k) {
      pd[k] = {oracle::random_int_vec3(rng, 6), oracle::random_int_vec3(rng, 4)};
      lines[k] = Line{pd[k].second, pd[k].first.cross(pd[k].second)};
      ok = ok && lines[k].valid();
    }
    if (!ok) continue;
    const auto r = common_transversals_4lines(lines);
    if (std::holds_alternative<DegeneratePencil>(r)) continue;
    // Exact quadratic coefficients from three samples of f.
    const Rational f0 = incidence_poly(pd, 0), f1 = incidence_poly(pd, 1), fm = incidence_poly(pd, -1);
    const Rational qa = (f1 + fm) / 2 - f0, qb = (f1 - fm) / 2, qc = f0;
    CHECK(incidence_poly(pd, 2) == 4 * qa + 2 * qb + qc);  // f is quadratic
    if (is_zero(qa)) continue;
    const Rational disc = qb * qb - 4 * qa * qc;
    const auto& sols = std::get<0>(r);
    for (const auto& s : sols)
      for (const auto& l : lines) CHECK(meets(s, l));
    if (disc.sign() < 0) {
      CHECK(sols.empty());
      continue;
    }
    ++with_roots;
    std::vector<F50> roots;
    const F50 sq = boost::multiprecision::sqrt(f50(disc));
    roots.push_back((-f50(qb) + sq) / (2 * f50(qa)));
    if (disc.sign() > 0) roots.push_back((-f50(qb) - sq) / (2 * f50(qa)));
    // Every numeric root gives a line through p(t) along n1 x n2 that some
    // exact solution reproduces to 35 digits. When n1 x n2 vanishes, p(t) lies
    // on L1 or L2, or in the plane of two meeting lines, and only the point is
    // determined.
    std::size_t matched = 0;
    for (const F50& t : roots) {
      const Vec3T<F50> p = to_f50(pd[3].first) + t * to_f50(pd[3].second);
      const Vec3T<F50> n1 = (to_f50(pd[0].first) - p).cross(to_f50(pd[0].second));
      const Vec3T<F50> n2 = (to_f50(pd[1].first) - p).cross(to_f50(pd[1].second));
      Vec3T<F50> dir = n1.cross(n2);
      const bool pointwise = dir.norm() < F50("1e-30");
      if (!pointwise) dir /= dir.norm();
      for (const auto& s : sols) {
        Vec3T<F50> sd = to_f50(s.d);
        sd /= sd.norm();
        const Vec3T<F50> sm = to_f50(s.m) / to_f50(s.d).norm();
        const bool through = (p.cross(sd) - sm).norm() < F50("1e-35");
        if (through && (pointwise || sd.cross(dir).norm() < F50("1e-35"))) {
          ++matched;
          break;
        }
      }
    }
    CHECK(matched == sols.size());
    for (const auto& s : sols)
      for (int c = 0; c < 3; ++c) irrational += !s.d(c).is_rational();
  }
  CHECK(with_roots > 50);
  CHECK(irrational > 0);
}

TEST_CASE("stacked triangles: the axis meets four edges through it") {
  const ConvexBody t0 = tri(vec3(0, 0, 0), vec3(3, 1, 0), vec3(1, 4, 0));
  const ConvexBody t1 = tri(vec3(0, 0, 1), vec3(-2, 1, 1), vec3(-1, -3, 1));
  const std::array<Line, 4> edges{Line::through(t0.vertices[0], t0.vertices[1]), Line::through(t0.vertices[0], t0.vertices[2]),
                                  Line::through(t1.vertices[0], t1.vertices[1]), Line::through(t1.vertices[0], t1.vertices[2])};
  for (const auto& e : edges) REQUIRE(is_zero(side(e, kZAxis)));
  // Two concurrent pairs in parallel planes: the axis joins the two meeting
  // points, and the planes' common line is at infinity.
  auto r = common_transversals_4lines(edges);
  REQUIRE(std::holds_alternative<std::vector<PluckerLine<QuadScalar>>>(r));
  bool on_axis = false;
  for (const auto& s : std::get<0>(r))
    on_axis = on_axis || (is_zero_vector(Vec3T<QuadScalar>(s.d.cross(kZAxis.d.cast<QuadScalar>()))) && s.contains(Vec3T<QuadScalar>::Zero()));
  CHECK(on_axis);
  // Generic edges through the axis at three heights.
  const std::array<Line, 4> skew{Line::through(vec3(0, 0, 0), vec3(3, 1, 0)), Line::through(vec3(0, 0, 1), vec3(1, 4, 2)),
                                 Line::through(vec3(0, 0, 2), vec3(-2, 1, 5)), Line::through(vec3(0, 0, 3), vec3(-1, -3, -1))};
  auto s = common_transversals_4lines(skew);
  REQUIRE(std::holds_alternative<std::vector<PluckerLine<QuadScalar>>>(s));
  bool axis = false;
  for (const auto& l : std::get<0>(s))
    axis = axis || (is_zero_vector(Vec3T<QuadScalar>(l.d.cross(kZAxis.d.cast<QuadScalar>()))) && l.contains(Vec3T<QuadScalar>::Zero()));
  CHECK(axis);
}

TEST_CASE("stacked triangles around the z-axis have a transversal") {
  const ConvexBody t = tri(vec3(2, -1, 0), vec3(-1, 3, 0), vec3(-2, -2, 0));
  const std::array<ConvexBody, 3> bodies{t, translated(t, vec3(0, 0, 1)), translated(t, vec3(0, 0, 2))};
  const auto rep = find_line_transversal(bodies);
  REQUIRE(rep.found());
  CHECK(verify_transversal(*rep.cert, bodies));
  CHECK(reverify_with_lp(*rep.cert, bodies));
  CHECK(rep.candidates_examined >= 1);

  const std::vector<Vec3> dirs{vec3(1, 0, 0), vec3(0, 0, 1)};
  auto r = direction_oracle(bodies, dirs);
  REQUIRE(std::holds_alternative<TransversalCert<Rational>>(r));
  CHECK(verify_transversal(std::get<TransversalCert<Rational>>(r), bodies));
  CHECK(transversal_with_direction(bodies, vec3(0, 0, 1)));
}

TEST_CASE("mutually radial triple has no transversal") {
  const ConvexBody base = tri(vec3(0, 0, 0), vec3(1, 0, 1), vec3(0, 1, -1));
  const std::array<ConvexBody, 3> bodies{base, translated(base, vec3(10, 0, 0)), translated(base, vec3(0, 10, 0))};
  const auto rep = find_line_transversal(bodies, SearchOptions{0});
  CHECK_FALSE(rep.found());
  CHECK(rep.candidates_examined > 100);
  const auto oracle = adaptive_direction_oracle(bodies, AdaptiveOracleOptions{100000, 64, 256});
  CHECK_FALSE(oracle.cert);
  CHECK(oracle.samples >= 100000);
  const auto with_cross_check = find_line_transversal(bodies);
  CHECK_FALSE(with_cross_check.found());
  CHECK(with_cross_check.oracle_samples == SearchOptions{}.oracle_cross_check);
}

TEST_CASE("far-apart bodies: the oracle samples nothing") {
  const ConvexBody base = tri(vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0));
  const std::array<ConvexBody, 3> bodies{base, translated(base, vec3(1000, 0, 0)), translated(base, vec3(0, 1000, 7))};
  auto r = direction_oracle(bodies, fibonacci_directions(5000));
  REQUIRE(std::holds_alternative<NoneSampled>(r));
  CHECK(std::get<NoneSampled>(r).samples == 5000);
}

TEST_CASE("Fibonacci and cap directions") {
  const auto dirs = fibonacci_directions(1000);
  CHECK(dirs.size() == 1000);
  std::set<std::string> distinct;
  for (const auto& d : dirs) {
    CHECK_FALSE(is_zero_vector(d));
    CHECK(d(2) >= 0);
    distinct.insert(to_string(Ray(d)));
  }
  CHECK(distinct.size() > 990);
  const Vec3 c = vec3(3, -2, 7);
  const auto cap = directions_around(c, 1e-3, 200);
  for (const auto& d : cap) {
    const auto a = oracle::to_double(d), b = oracle::to_double(c);
    const double cosang = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) /
                          std::sqrt((a[0] * a[0] + a[1] * a[1] + a[2] * a[2]) * (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]));
    CHECK(cosang > std::cos(1.5e-3));
  }
}

TEST_CASE("irrational transversals certify exactly") {
  // d = (1, sqrt 2, 0) through the origin crosses x = 1, 2, 3 at (x, x sqrt 2, 0).
  const QuadScalar r2(0, 1, 2);
  PluckerLine<QuadScalar> line{Vec3T<QuadScalar>(QuadScalar(1), r2, QuadScalar(0)), Vec3T<QuadScalar>::Zero()};
  std::array<ConvexBody, 3> bodies;
  for (int x = 1; x <= 3; ++x)
    bodies[static_cast<std::size_t>(x - 1)] = tri(vec3(x, 0, -x), vec3(x, 3 * x, -x), vec3(x, 0, x));
  auto cert = certify_line(line, std::span<const ConvexBody>(bodies));
  REQUIRE(cert);
  const AnyTransversalCert any = *cert;
  CHECK(is_irrational(any));
  CHECK(verify_transversal(any, bodies));
  CHECK(reverify_with_lp(any, bodies));
  // Rotating past the hypotenuse misses the first triangle.
  PluckerLine<QuadScalar> steep{Vec3T<QuadScalar>(QuadScalar(1), QuadScalar(0, 3, 2), QuadScalar(0)), Vec3T<QuadScalar>::Zero()};
  CHECK_FALSE(certify_line(steep, std::span<const ConvexBody>(bodies)));
  auto tampered = *cert;
  tampered.proofs[0].weights[0] += QuadScalar(Rational(1, 10));
  CHECK_FALSE(verify_transversal(AnyTransversalCert(tampered), bodies));
}

TEST_CASE("found certificates admit nearby oracle directions") {
  std::mt19937_64 rng(54);
  int found = 0, confirmed = 0;
  for (int it = 0; it < 60; ++it) {
    const auto bodies = random_triple(rng, 6, 5);
    const auto rep = find_line_transversal(bodies, SearchOptions{0});
    if (!rep.found()) continue;
    ++found;
    REQUIRE(verify_transversal(*rep.cert, bodies));
    Vec3 dir;
    if (const auto* r = std::get_if<TransversalCert<Rational>>(&*rep.cert)) {
      dir = r->line.d;
    } else {
      const auto& q = std::get<TransversalCert<QuadScalar>>(*rep.cert);
      for (int c = 0; c < 3; ++c) dir(c) = Rational(std::llround(q.line.d(c).to_double() * (1 << 20)));
    }
    bool hit = static_cast<bool>(transversal_with_direction(bodies, dir));
    for (double radius : {1e-2, 1e-3, 1e-4, 1e-5}) {
      if (hit) break;
      hit = std::holds_alternative<TransversalCert<Rational>>(direction_oracle(bodies, directions_around(dir, radius, 512)));
    }
    confirmed += hit;
  }
  CHECK(found > 20);
  CHECK(confirmed == found);
}

namespace {

// Some line parallel to dir meets every body: the bodies' projections along
// dir share a point.
bool parallel_transversal_lp(std::span<const ConvexBody> bodies, const Vec3& dir) {
  const auto n = static_cast<Eigen::Index>(3 + 4 * bodies.size());
  LinearSystem<Rational> sys(n);
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    const auto base = static_cast<Eigen::Index>(3 + 4 * k);
    VecX sum = VecX::Zero(n);
    for (int c = 0; c < 3; ++c) {
      VecX row = VecX::Zero(n);
      row(c) = 1;
      row(base) = dir(c);
      for (int v = 0; v < 3; ++v) row(base + 1 + v) = -bodies[k].vertices[static_cast<std::size_t>(v)](c);
      sys.add_eq(row, 0);
      sum(base + 1 + c) = 1;
      sys.add_bound(base + 1 + c, 1, Relation::GreaterEqual, 0);
    }
    sys.add_eq(sum, 1);
  }
  return is_feasible(lp_solve(sys));
}

}  // namespace

TEST_CASE("flat bodies stay exact on the integer fast path") {
  std::mt19937_64 rng(57);
  std::uniform_int_distribution<int> shape(0, 2);
  int hits = 0, flat = 0;
  for (int it = 0; it < 150; ++it) {
    std::array<ConvexBody, 3> bodies;
    for (auto& b : bodies) {
      const Vec3 c = oracle::random_int_vec3(rng, 3), u = oracle::random_int_vec3(rng, 3);
      switch (shape(rng)) {
        case 0:  // segment through c with a repeated vertex or a midpoint
          b = tri(c, c + u, rng() % 2 ? c : c + 2 * u);
          ++flat;
          break;
        case 1:  // point
          b = tri(c, c, c);
          ++flat;
          break;
        default:
          b = tri(c, c + u, c + oracle::random_int_vec3(rng, 3));
      }
    }
    for (int d = 0; d < 8; ++d) {
      // Half the directions join a vertex of body 0 to one of body 1.
      Vec3 dir = bodies[0].vertices[rng() % 3] - bodies[1].vertices[rng() % 3];
      if (d % 2 || is_zero_vector(dir)) dir = to_vec3(oracle::nonzero_int_vec(rng, 3, 4));
      for (std::size_t count : {3, 2}) {
        const std::span<const ConvexBody> span(bodies.data(), count);
        const bool want = parallel_transversal_lp(span, dir);
        const auto got = transversal_with_direction(span, dir);
        CHECK(static_cast<bool>(got) == want);
        if (got) CHECK(verify_transversal(*got, span));
        hits += want;
      }
    }
  }
  CHECK(flat > 100);
  CHECK(hits > 100);
}

TEST_CASE("verdicts are invariant under rational rotations") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> u(-1, 1);
  int found = 0;
  for (int it = 0; it < 30; ++it) {
    // Cayley transform of a skew matrix: an exact rational rotation.
    Eigen::Matrix<Rational, 3, 3> s = Eigen::Matrix<Rational, 3, 3>::Zero();
    s(0, 1) = u(rng);
    s(0, 2) = u(rng);
    s(1, 2) = u(rng);
    s(1, 0) = -s(0, 1);
    s(2, 0) = -s(0, 2);
    s(2, 1) = -s(1, 2);
    const Eigen::Matrix<Rational, 3, 3> id = Eigen::Matrix<Rational, 3, 3>::Identity();
    const Eigen::Matrix<Rational, 3, 3> rot = (id - s).inverse() * (id + s);
    REQUIRE(rot.transpose() * rot == id);
    const auto bodies = random_triple(rng, 6, 5);
    auto moved = bodies;
    for (auto& b : moved)
      for (auto& v : b.vertices) v = rot * v;
    const auto a = find_line_transversal(bodies);
    const auto b = find_line_transversal(moved);
    CHECK(a.found() == b.found());
    if (b.found()) CHECK(verify_transversal(*b.cert, moved));
    found += a.found();
  }
  CHECK(found > 5);
}
