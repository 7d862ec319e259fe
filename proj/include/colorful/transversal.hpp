#ifndef COLORFUL_TRANSVERSAL_HPP
#define COLORFUL_TRANSVERSAL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "colorful/convex.hpp"
#include "colorful/plucker.hpp"

namespace colorful {

template <class K>
struct TransversalCert {
  PluckerLine<K> line;
  std::vector<StabProof<K>> proofs;  // one per body, in body order
};

using AnyTransversalCert = std::variant<TransversalCert<Rational>, TransversalCert<QuadScalar>>;

template <class K>
bool verify_transversal(const TransversalCert<K>& cert, std::span<const ConvexBody> bodies) {
  if (!cert.line.valid() || cert.proofs.size() != bodies.size()) return false;
  for (std::size_t i = 0; i < bodies.size(); ++i)
    if (!verify_stab(cert.line, bodies[i], cert.proofs[i])) return false;
  return true;
}

/// Pure arithmetic check of the stored weights.
bool verify_transversal(const AnyTransversalCert& cert, std::span<const ConvexBody> bodies);

/// Independent re-check: decides each incidence afresh by line_meets_body.
bool reverify_with_lp(const AnyTransversalCert& cert, std::span<const ConvexBody> bodies);

bool is_irrational(const AnyTransversalCert& cert);

/// Builds a certificate when the line meets every body.
template <class K>
std::optional<TransversalCert<K>> certify_line(const PluckerLine<K>& line, std::span<const ConvexBody> bodies) {
  if (!line.valid()) return std::nullopt;
  TransversalCert<K> cert{line, {}};
  for (const ConvexBody& body : bodies) {
    std::optional<StabProof<K>> proof;
    if (body.size() == 3) {
      proof = stab_triangle(line, Triangle{{body.vertices[0], body.vertices[1], body.vertices[2]}});
    } else {
      auto r = line_meets_body(line, body);
      if (auto* p = std::get_if<StabProof<K>>(&r)) proof = std::move(*p);
    }
    if (!proof) return std::nullopt;
    cert.proofs.push_back(std::move(*proof));
  }
  return cert;
}

struct SearchReport {
  std::size_t candidates_examined = 0;
  std::size_t degenerate_skipped = 0;
  std::size_t oracle_samples = 0;
  /// Candidate class that produced the certificate: "vertex-vertex",
  /// "vertex-edge-edge", "four-edge", or "direction-oracle".
  std::string found_by;
  std::optional<AnyTransversalCert> cert;

  bool found() const { return cert.has_value(); }
  /// Enumeration missed a transversal that the oracle cross-check found.
  bool oracle_disagreement() const { return found_by == "direction-oracle"; }
};

struct SearchOptions {
  /// Fibonacci directions tried when enumeration finds nothing; 0 disables.
  std::size_t oracle_cross_check = 2048;
};

/// Enumerates extremal candidate lines (vertex-vertex, vertex-edge-edge,
/// four-edge common transversals) and tests each exactly.
SearchReport find_line_transversal(const std::array<ConvexBody, 3>& bodies, const SearchOptions& opts = {});

// --- direction-space oracle ------------------------------------------------

struct NoneSampled {
  std::size_t samples = 0;
};

using OracleResult = std::variant<TransversalCert<Rational>, NoneSampled>;

/// Exact test of a single direction: a line parallel to `dir` meets every
/// body iff their projections along `dir` share a point.
std::optional<TransversalCert<Rational>> transversal_with_direction(std::span<const ConvexBody> bodies,
                                                                    const Vec3& dir);

/// Tries each sampled direction in order. NoneSampled proves nothing.
OracleResult direction_oracle(std::span<const ConvexBody> bodies, std::span<const Vec3> directions);

/// N integer directions on the upper hemisphere from a Fibonacci lattice,
/// rounded at the given scale.
std::vector<Vec3> fibonacci_directions(std::size_t count, long scale = 1L << 16);

/// Integer directions on a spiral cap of angular radius `radius` around `center`.
std::vector<Vec3> directions_around(const Vec3& center, double radius, std::size_t count, long scale = 1L << 20);

struct AdaptiveOracleOptions {
  std::size_t base_count = 100000;
  std::size_t max_refine_seeds = 64;
  std::size_t refine_count = 256;
};

struct AdaptiveOracleReport {
  std::optional<TransversalCert<Rational>> cert;
  std::size_t samples = 0;
  std::size_t refine_seeds = 0;
};

/// Fibonacci lattice, then dense caps around near-miss directions (all
/// projected pairs overlap but the triple does not).
AdaptiveOracleReport adaptive_direction_oracle(std::span<const ConvexBody> bodies,
                                               const AdaptiveOracleOptions& opts = {});

}  // namespace colorful

#endif  // COLORFUL_TRANSVERSAL_HPP
