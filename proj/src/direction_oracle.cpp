#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "colorful/transversal.hpp"

namespace colorful {

namespace {

using i128 = __int128;

struct Pt {
  i128 x, y;
};

struct HalfPlane {
  i128 a, b, c;  // a x + b y + c >= 0
};

// Projected coordinates are bounded by 2^29 so every product formed in
// common_point() stays below 2^123.
constexpr i128 kMaxProjected = i128(1) << 29;

bool fits_int64(const Rational& r, std::int64_t& out) {
  if (denominator_of(r) != 1) return false;
  const Integer n(numerator_of(r));
  if (boost::multiprecision::abs(n) > Integer(std::int64_t(1) << 40)) return false;
  out = n.convert_to<std::int64_t>();
  return true;
}

i128 cross(const Pt& o, const Pt& a, const Pt& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Integer projection along an integer direction, onto the coordinate plane
// orthogonal to its largest component (scaled by that component).
class FastProjector {
 public:
  // Integer vertex coordinates shared by every direction. Returns false when
  // the bodies are outside the fast path.
  bool load(std::span<const ConvexBody> bodies) {
    verts_.clear();
    // A common scale clears denominators without changing projected overlaps.
    Integer scale = 1;
    for (const ConvexBody& body : bodies) {
      if (body.size() != 3) return false;
      for (const Vec3& v : body.vertices)
        for (int k = 0; k < 3; ++k) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v(k)));
    }
    for (const ConvexBody& body : bodies) {
      std::array<std::array<std::int64_t, 3>, 3> t;
      for (std::size_t v = 0; v < 3; ++v)
        for (int k = 0; k < 3; ++k)
          if (!fits_int64(Rational(body.vertices[v](k) * scale), t[v][static_cast<std::size_t>(k)])) return false;
      verts_.push_back(t);
    }
    return true;
  }

  // Returns false when the direction is outside the fast path.
  bool project(const Vec3& dir) {
    std::int64_t dv[3];
    for (int k = 0; k < 3; ++k)
      if (!fits_int64(dir(k), dv[k])) return false;
    int big = 0;
    for (int k = 1; k < 3; ++k)
      if (std::llabs(dv[k]) > std::llabs(dv[big])) big = k;
    if (dv[big] == 0) return false;
    const auto i = static_cast<std::size_t>((big + 1) % 3);
    const auto j = static_cast<std::size_t>((big + 2) % 3);
    const auto b = static_cast<std::size_t>(big);
    planes_.clear();
    boxes_.clear();
    ranges_.clear();
    for (const auto& body : verts_) {
      std::array<Pt, 3> t;
      for (std::size_t v = 0; v < 3; ++v) {
        const auto& p = body[v];
        t[v] = Pt{i128(p[i]) * dv[big] - i128(p[b]) * dv[i], i128(p[j]) * dv[big] - i128(p[b]) * dv[j]};
        const i128 mx = std::max(t[v].x < 0 ? -t[v].x : t[v].x, t[v].y < 0 ? -t[v].y : t[v].y);
        if (mx >= kMaxProjected) return false;
      }
      Box box{t[0].x, t[0].x, t[0].y, t[0].y};
      for (const Pt& p : t) {
        box.x0 = std::min(box.x0, p.x);
        box.x1 = std::max(box.x1, p.x);
        box.y0 = std::min(box.y0, p.y);
        box.y1 = std::max(box.y1, p.y);
      }
      boxes_.push_back(box);
      add_body(t);
    }
    return true;
  }

  bool boxes_overlap(std::size_t s, std::size_t t) const {
    return boxes_[s].x0 <= boxes_[t].x1 && boxes_[t].x0 <= boxes_[s].x1 && boxes_[s].y0 <= boxes_[t].y1 &&
           boxes_[t].y0 <= boxes_[s].y1;
  }

  // Closed bounded polygon given by the chosen bodies' halfplanes is
  // nonempty iff it has a vertex: a pair of independent boundary lines whose
  // crossing satisfies every halfplane.
  bool common_point(std::initializer_list<std::size_t> which) const {
    std::vector<const HalfPlane*> hs;
    for (std::size_t w : which)
      for (std::size_t k = ranges_[w].first; k < ranges_[w].second; ++k) hs.push_back(&planes_[k]);
    for (std::size_t s : which)
      for (std::size_t t : which)
        if (s < t && !boxes_overlap(s, t)) return false;
    for (std::size_t p = 0; p < hs.size(); ++p) {
      for (std::size_t q = p + 1; q < hs.size(); ++q) {
        const HalfPlane& h1 = *hs[p];
        const HalfPlane& h2 = *hs[q];
        i128 den = h1.a * h2.b - h2.a * h1.b;
        if (den == 0) continue;
        i128 xn = h1.b * h2.c - h2.b * h1.c;
        i128 yn = h2.a * h1.c - h1.a * h2.c;
        if (den < 0) {
          den = -den;
          xn = -xn;
          yn = -yn;
        }
        bool ok = true;
        for (const HalfPlane* h : hs) {
          if (h->a * xn + h->b * yn + h->c * den < 0) {
            ok = false;
            break;
          }
        }
        if (ok) return true;
      }
    }
    return false;
  }

  std::size_t count() const { return boxes_.size(); }

 private:
  void add_plane(i128 a, i128 b, const Pt& through) { planes_.push_back({a, b, -(a * through.x + b * through.y)}); }

  // Closed halfplanes cutting out one projected body. A flat projection (a
  // segment or a point) becomes a line pair with end caps, or two line pairs.
  void add_body(std::array<Pt, 3> t) {
    const std::size_t first = planes_.size();
    const i128 o = cross(t[0], t[1], t[2]);
    if (o != 0) {
      if (o < 0) std::swap(t[1], t[2]);
      for (int e = 0; e < 3; ++e) {
        const Pt& a = t[static_cast<std::size_t>(e)];
        const Pt& b = t[static_cast<std::size_t>((e + 1) % 3)];
        add_plane(-(b.y - a.y), b.x - a.x, a);
      }
    } else {
      auto dist = [](const Pt& p, const Pt& q) {
        const i128 dx = p.x - q.x, dy = p.y - q.y;
        return dx * dx + dy * dy;
      };
      Pt a = t[0], b = t[1];
      for (const auto& [p, q] : {std::pair{t[0], t[2]}, std::pair{t[1], t[2]}})
        if (dist(p, q) > dist(a, b)) a = p, b = q;
      if (dist(a, b) == 0) {
        add_plane(1, 0, a);
        add_plane(-1, 0, a);
        add_plane(0, 1, a);
        add_plane(0, -1, a);
      } else {
        const i128 ux = b.x - a.x, uy = b.y - a.y;
        add_plane(-uy, ux, a);
        add_plane(uy, -ux, a);
        add_plane(ux, uy, a);
        add_plane(-ux, -uy, b);
      }
    }
    ranges_.push_back({first, planes_.size()});
  }

  struct Box {
    i128 x0, x1, y0, y1;
  };
  std::vector<HalfPlane> planes_;
  std::vector<Box> boxes_;
  std::vector<std::pair<std::size_t, std::size_t>> ranges_;
  std::vector<std::array<std::array<std::int64_t, 3>, 3>> verts_;
};

// Exact LP: point x, parameters t_k and weights w_k with
// sum_v w_kv v = x + t_k dir for every body k.
std::optional<TransversalCert<Rational>> lp_direction(std::span<const ConvexBody> bodies, const Vec3& dir) {
  Eigen::Index nvars = 3 + static_cast<Eigen::Index>(bodies.size());
  std::vector<Eigen::Index> offset;
  for (const ConvexBody& b : bodies) {
    offset.push_back(nvars);
    nvars += static_cast<Eigen::Index>(b.size());
  }
  LinearSystem<Rational> sys(nvars);
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    const auto& vs = bodies[k].vertices;
    const auto tk = 3 + static_cast<Eigen::Index>(k);
    for (int c = 0; c < 3; ++c) {
      VecX row = VecX::Zero(nvars);
      row(c) = -1;
      row(tk) = -dir(c);
      for (std::size_t v = 0; v < vs.size(); ++v) row(offset[k] + static_cast<Eigen::Index>(v)) = vs[v](c);
      sys.add_eq(std::move(row), 0);
    }
    VecX sum = VecX::Zero(nvars);
    for (std::size_t v = 0; v < vs.size(); ++v) sum(offset[k] + static_cast<Eigen::Index>(v)) = 1;
    sys.add_eq(std::move(sum), 1);
    for (std::size_t v = 0; v < vs.size(); ++v)
      sys.add_bound(offset[k] + static_cast<Eigen::Index>(v), 1, Relation::GreaterEqual, 0);
  }
  auto r = lp_solve(sys);
  const auto* f = std::get_if<Feasible<Rational>>(&r);
  if (!f) return std::nullopt;
  const Vec3 x(f->witness(0), f->witness(1), f->witness(2));
  TransversalCert<Rational> cert{PluckerLine<Rational>{dir, x.cross(dir)}, {}};
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    StabProof<Rational> proof;
    for (std::size_t v = 0; v < bodies[k].size(); ++v)
      proof.weights.push_back(f->witness(offset[k] + static_cast<Eigen::Index>(v)));
    cert.proofs.push_back(std::move(proof));
  }
  if (!verify_transversal(cert, bodies)) throw std::logic_error("direction LP produced an invalid certificate");
  return cert;
}

Vec3 integer_direction(double x, double y, double z, long scale) {
  return Vec3(Rational(std::llround(x * static_cast<double>(scale))),
              Rational(std::llround(y * static_cast<double>(scale))),
              Rational(std::llround(z * static_cast<double>(scale))));
}

std::optional<TransversalCert<Rational>> with_direction(FastProjector& proj, bool loaded,
                                                        std::span<const ConvexBody> bodies, const Vec3& dir) {
  if (loaded && proj.project(dir)) {
    bool hit = true;
    if (proj.count() == 3)
      hit = proj.common_point({0, 1, 2});
    else if (proj.count() == 2)
      hit = proj.common_point({0, 1});
    if (!hit) return std::nullopt;
    auto cert = lp_direction(bodies, dir);
    if (!cert) throw std::logic_error("fast projection test and direction LP disagree");
    return cert;
  }
  return lp_direction(bodies, dir);
}

}  // namespace

std::optional<TransversalCert<Rational>> transversal_with_direction(std::span<const ConvexBody> bodies,
                                                                    const Vec3& dir) {
  if (is_zero_vector(dir)) throw std::invalid_argument("direction must be nonzero");
  FastProjector proj;
  return with_direction(proj, proj.load(bodies), bodies, dir);
}

OracleResult direction_oracle(std::span<const ConvexBody> bodies, std::span<const Vec3> directions) {
  if (directions.empty()) throw std::invalid_argument("direction_oracle needs a nonempty sample");
  std::size_t n = 0;
  FastProjector proj;
  const bool loaded = proj.load(bodies);
  for (const Vec3& dir : directions) {
    if (is_zero_vector(dir)) continue;
    ++n;
    if (auto cert = with_direction(proj, loaded, bodies, dir)) return std::move(*cert);
  }
  return NoneSampled{n};
}

std::vector<Vec3> fibonacci_directions(std::size_t count, long scale) {
  std::vector<Vec3> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    Vec3 d = integer_direction(r * std::cos(phi), r * std::sin(phi), z, scale);
    if (!is_zero_vector(d)) out.push_back(std::move(d));
  }
  return out;
}

std::vector<Vec3> directions_around(const Vec3& center, double radius, std::size_t count, long scale) {
  double c[3] = {center(0).convert_to<double>(), center(1).convert_to<double>(), center(2).convert_to<double>()};
  const double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  if (norm == 0) throw std::invalid_argument("directions_around needs a nonzero center");
  for (double& v : c) v /= norm;
  // Orthonormal frame (c, e1, e2).
  double e1[3] = {0, 0, 0};
  const int k = std::fabs(c[0]) < 0.9 ? 0 : 1;
  e1[k] = 1;
  const double proj = e1[0] * c[0] + e1[1] * c[1] + e1[2] * c[2];
  for (int i = 0; i < 3; ++i) e1[i] -= proj * c[i];
  const double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  for (double& v : e1) v /= n1;
  const double e2[3] = {c[1] * e1[2] - c[2] * e1[1], c[2] * e1[0] - c[0] * e1[2], c[0] * e1[1] - c[1] * e1[0]};

  std::vector<Vec3> out;
  out.reserve(count + 1);
  out.push_back(integer_direction(c[0], c[1], c[2], scale));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 1; i <= count; ++i) {
    const double rho = radius * std::sqrt(static_cast<double>(i) / static_cast<double>(count));
    const double phi = golden * static_cast<double>(i);
    double v[3];
    for (int a = 0; a < 3; ++a) v[a] = c[a] + rho * (std::cos(phi) * e1[a] + std::sin(phi) * e2[a]);
    Vec3 d = integer_direction(v[0], v[1], v[2], scale);
    if (!is_zero_vector(d)) out.push_back(std::move(d));
  }
  return out;
}

AdaptiveOracleReport adaptive_direction_oracle(std::span<const ConvexBody> bodies, const AdaptiveOracleOptions& opts) {
  AdaptiveOracleReport rep;
  const auto base = fibonacci_directions(opts.base_count);
  std::vector<Vec3> near;
  FastProjector proj;
  const bool loaded = proj.load(bodies);
  for (const Vec3& dir : base) {
    ++rep.samples;
    if (loaded && proj.project(dir) && proj.count() == 3) {
      if (!proj.common_point({0, 1, 2})) {
        if (near.size() < opts.max_refine_seeds && proj.common_point({0, 1}) && proj.common_point({0, 2}) &&
            proj.common_point({1, 2}))
          near.push_back(dir);
        continue;
      }
    }
    if (auto cert = with_direction(proj, loaded, bodies, dir)) {
      rep.cert = std::move(*cert);
      return rep;
    }
  }
  // Spacing of an N-point lattice on the hemisphere is about sqrt(2 pi / N).
  const double spacing = std::sqrt(2.0 * std::numbers::pi / static_cast<double>(std::max<std::size_t>(1, opts.base_count)));
  for (const Vec3& seed : near) {
    ++rep.refine_seeds;
    for (const Vec3& dir : directions_around(seed, 2.0 * spacing, opts.refine_count)) {
      ++rep.samples;
      if (auto cert = with_direction(proj, loaded, bodies, dir)) {
        rep.cert = std::move(*cert);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace colorful
