#include "colorful/transversal.hpp"

namespace colorful {

bool verify_transversal(const AnyTransversalCert& cert, std::span<const ConvexBody> bodies) {
  return std::visit([&](const auto& c) { return verify_transversal(c, bodies); }, cert);
}

bool reverify_with_lp(const AnyTransversalCert& cert, std::span<const ConvexBody> bodies) {
  return std::visit(
      [&](const auto& c) {
        if (!c.line.valid()) return false;
        for (const ConvexBody& body : bodies) {
          auto r = line_meets_body(c.line, body);
          if (r.index() != 0) return false;
          const auto& proof = std::get<0>(r);
          if (!verify_stab(c.line, body, proof)) return false;
        }
        return true;
      },
      cert);
}

bool is_irrational(const AnyTransversalCert& cert) {
  const auto* q = std::get_if<TransversalCert<QuadScalar>>(&cert);
  if (!q) return false;
  for (int k = 0; k < 3; ++k)
    if (!q->line.d(k).is_rational() || !q->line.m(k).is_rational()) return true;
  return false;
}

namespace {

struct EdgeLine {
  std::size_t body;
  Vec3 a;
  Vec3 b;
  PluckerLine<Rational> line;
};

// All vertex pairs of each body; for triangles these are exactly the edges.
std::vector<EdgeLine> edge_lines(const std::array<ConvexBody, 3>& bodies) {
  std::vector<EdgeLine> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& vs = bodies[i].vertices;
    for (std::size_t s = 0; s < vs.size(); ++s)
      for (std::size_t t = s + 1; t < vs.size(); ++t)
        if (vs[s] != vs[t]) out.push_back({i, vs[s], vs[t], PluckerLine<Rational>::through(vs[s], vs[t])});
  }
  return out;
}

bool on_line(const Vec3& v, const EdgeLine& e) { return is_zero_vector((v - e.a).cross(e.b - e.a)); }

// Collapses a Q(sqrt D) line with rational coordinates back to Q.
std::optional<PluckerLine<Rational>> rational_part(const PluckerLine<QuadScalar>& l) {
  PluckerLine<Rational> out;
  for (int k = 0; k < 3; ++k) {
    if (!l.d(k).is_rational() || !l.m(k).is_rational()) return std::nullopt;
    out.d(k) = l.d(k).a();
    out.m(k) = l.m(k).a();
  }
  return out;
}

}  // namespace

SearchReport find_line_transversal(const std::array<ConvexBody, 3>& bodies, const SearchOptions& opts) {
  SearchReport rep;
  const std::span<const ConvexBody> span(bodies.data(), bodies.size());

  auto try_rational = [&](const PluckerLine<Rational>& line, const char* cls) {
    ++rep.candidates_examined;
    if (auto cert = certify_line(line, span)) {
      rep.cert = std::move(*cert);
      rep.found_by = cls;
      return true;
    }
    return false;
  };

  std::vector<Vec3> verts;
  for (const auto& b : bodies) verts.insert(verts.end(), b.vertices.begin(), b.vertices.end());

  // Lines through two vertices.
  for (std::size_t s = 0; s < verts.size(); ++s) {
    for (std::size_t t = s + 1; t < verts.size(); ++t) {
      if (verts[s] == verts[t]) {
        ++rep.degenerate_skipped;
        continue;
      }
      if (try_rational(PluckerLine<Rational>::through(verts[s], verts[t]), "vertex-vertex")) return rep;
    }
  }

  const auto edges = edge_lines(bodies);

  // Lines through a vertex meeting two edge lines: the intersection of the
  // two planes spanned by the vertex and each edge.
  for (const Vec3& v : verts) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (on_line(v, edges[e])) continue;
      const Vec3 n1 = (edges[e].a - v).cross(edges[e].b - v);
      for (std::size_t f = e + 1; f < edges.size(); ++f) {
        if (on_line(v, edges[f])) continue;
        const Vec3 dir = n1.cross((edges[f].a - v).cross(edges[f].b - v));
        if (is_zero_vector(dir)) {
          ++rep.degenerate_skipped;
          continue;
        }
        if (try_rational(PluckerLine<Rational>{dir, v.cross(dir)}, "vertex-edge-edge")) return rep;
      }
    }
  }

  // Common transversals of four edge lines.
  const std::size_t ne = edges.size();
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = i + 1; j < ne; ++j)
      for (std::size_t k = j + 1; k < ne; ++k)
        for (std::size_t l = k + 1; l < ne; ++l) {
          auto sol = common_transversals_4lines({edges[i].line, edges[j].line, edges[k].line, edges[l].line});
          if (std::holds_alternative<DegeneratePencil>(sol)) {
            // The vertex-vertex class above already covers the fallback.
            ++rep.degenerate_skipped;
            continue;
          }
          for (const auto& line : std::get<0>(sol)) {
            if (auto rat = rational_part(line)) {
              if (try_rational(*rat, "four-edge")) return rep;
              continue;
            }
            ++rep.candidates_examined;
            if (auto cert = certify_line(line, span)) {
              rep.cert = std::move(*cert);
              rep.found_by = "four-edge";
              return rep;
            }
          }
        }

  if (opts.oracle_cross_check > 0) {
    const auto dirs = fibonacci_directions(opts.oracle_cross_check);
    auto r = direction_oracle(span, dirs);
    if (auto* cert = std::get_if<TransversalCert<Rational>>(&r)) {
      rep.oracle_samples = dirs.size();
      rep.cert = std::move(*cert);
      rep.found_by = "direction-oracle";
      return rep;
    }
    rep.oracle_samples = std::get<NoneSampled>(r).samples;
  }
  return rep;
}

}  // namespace colorful
