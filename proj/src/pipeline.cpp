#include "colorful/pipeline.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace colorful {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Red: return "red";
    case Verdict::Blue: return "blue";
    case Verdict::Both: return "both";
  }
  return "?";
}

std::string to_string(TraceStage s) {
  switch (s) {
    case TraceStage::RedPatternFails: return "red_pattern_fails";
    case TraceStage::BluePatternFails: return "blue_pattern_fails";
    case TraceStage::DegenerateDrawing: return "degenerate_drawing";
    case TraceStage::NoCrossing: return "no_crossing";
    case TraceStage::LemmaPreconditionFails: return "lemma_precondition_fails";
    case TraceStage::Complete: return "complete";
  }
  return "?";
}

bool verify_theorem_cert(const TheoremCert& cert, const ColorConfig& cfg) {
  const auto reds = cfg.red_bodies();
  const auto blues = cfg.blue_bodies();
  const bool want_red = cert.verdict != Verdict::Blue;
  const bool want_blue = cert.verdict != Verdict::Red;
  if (want_red != cert.red.has_value() || want_blue != cert.blue.has_value()) return false;
  if (cert.red && !verify_transversal(*cert.red, reds)) return false;
  if (cert.blue && !verify_transversal(*cert.blue, blues)) return false;
  return true;
}

void complete_chain(ProofTrace& trace, const std::array<SeparationCert, 3>& blue,
                    const std::array<SeparationCert, 3>& red, const ColorConfig& cfg) {
  try {
    trace.drawing = build_drawing(blue, red);
  } catch (const DegenerateDrawing& e) {
    trace.stage = TraceStage::DegenerateDrawing;
    trace.note = e.what();
    return;
  }
  auto crossing = find_crossing(*trace.drawing);
  if (std::holds_alternative<NoCrossing>(crossing)) {
    trace.stage = TraceStage::NoCrossing;
    trace.note = "no vertex-disjoint arcs cross: geodesic K33 drawing without crossing";
    return;
  }
  trace.crossing = std::get<CrossingWitness>(crossing);
  const Arc& first = trace.crossing->first;
  const Arc& second = trace.crossing->second;
  // Arc (i,j) joins blue normal i to red normal j and is named by matrix entry (i,j).
  LemmaInstance inst{blue[first.blue].half,
                     red[first.red].half,
                     red[second.red].half,
                     blue[second.blue].half,
                     to_vecx(cfg.matrix[first.blue][first.red]),
                     to_vecx(cfg.matrix[second.blue][second.red])};
  trace.lemma_instance = inst;
  if (auto k = first_violation(inst)) {
    trace.stage = TraceStage::LemmaPreconditionFails;
    trace.violated_precondition = *k;
    trace.note = std::string("crossing arcs ") + first.label() + "/" + second.label() +
                 " do not satisfy the lemma hypotheses: " + kPreconditionNames[*k];
    return;
  }
  trace.lemma_verdict = verify_basic_lemma(inst);
  trace.stage = TraceStage::Complete;
  trace.note = confirmed(*trace.lemma_verdict)
                   ? "crossing witness and lemma certificate coexist: arithmetic inconsistency"
                   : "lemma falsified by crossing witness";
}

ProofTrace diagnostic_chain(const ColorConfig& cfg) {
  ProofTrace trace{separation_pattern(cfg.red_bodies()), separation_pattern(cfg.blue_bodies())};
  if (!holds(trace.red_pattern)) {
    trace.stage = TraceStage::RedPatternFails;
    const auto& f = std::get<PatternFails>(trace.red_pattern);
    trace.note = "red triangle " + std::to_string(f.index) + " meets the hull of the other two";
    return trace;
  }
  if (!holds(trace.blue_pattern)) {
    trace.stage = TraceStage::BluePatternFails;
    const auto& f = std::get<PatternFails>(trace.blue_pattern);
    trace.note = "blue triangle " + std::to_string(f.index) + " meets the hull of the other two";
    return trace;
  }
  complete_chain(trace, std::get<FullPattern>(trace.blue_pattern).certs,
                 std::get<FullPattern>(trace.red_pattern).certs, cfg);
  return trace;
}

// p = sum w_j v + sum w_k v with lambda = sum w_j. Then p lies on the
// segment between b = (sum w_j v)/lambda in body j and c in body k.
std::optional<TransversalCert<Rational>> line_from_pattern_failure(const std::array<ConvexBody, 3>& bodies,
                                                                  const PatternFails& fail) {
  const std::size_t i = fail.index;
  const std::size_t j = (i == 0) ? 1 : 0;
  const std::size_t k = (i == 2) ? 1 : 2;
  const auto& w = fail.witness.weights_q;
  const std::size_t nj = bodies[j].size();
  Rational lambda = 0;
  Vec3 bj = Vec3::Zero(), ck = Vec3::Zero();
  for (std::size_t s = 0; s < nj; ++s) {
    lambda += w[s];
    bj += w[s] * bodies[j].vertices[s];
  }
  for (std::size_t s = 0; s < bodies[k].size(); ++s) ck += w[nj + s] * bodies[k].vertices[s];
  const Vec3& p = fail.witness.point;

  std::vector<Vec3> through;  // second points to try, in order
  if (lambda.is_zero()) {
    through = bodies[j].vertices;
  } else if (lambda == 1) {
    through = bodies[k].vertices;
  } else {
    through.push_back(ck / (1 - lambda));
    bj /= lambda;
    if (bj != p) through.insert(through.begin(), bj);
  }
  through.push_back(p + vec3(1, 0, 0));
  const std::span<const ConvexBody> span(bodies.data(), bodies.size());
  for (const Vec3& q : through) {
    if (q == p) continue;
    if (auto cert = certify_line(PluckerLine<Rational>::through(p, q), span)) return cert;
  }
  return std::nullopt;
}

namespace {

std::array<ConvexBody, 3> perturbed(const std::array<ConvexBody, 3>& bodies, std::mt19937_64& rng) {
  std::array<ConvexBody, 3> out = bodies;
  for (auto& b : out) {
    Vec3 shift;
    for (int c = 0; c < 3; ++c) shift(c) = Rational(static_cast<long>(rng() % 2001) - 1000, 1000000);
    for (auto& v : b.vertices) v += shift;
  }
  return out;
}

Vec3 direction_of(const AnyTransversalCert& cert) {
  if (const auto* r = std::get_if<TransversalCert<Rational>>(&cert)) return r->line.d;
  const auto& q = std::get<TransversalCert<QuadScalar>>(cert);
  Vec3 d;
  for (int c = 0; c < 3; ++c) d(c) = Rational(std::llround(q.line.d(c).to_double() * 1048576.0));
  return d;
}

}  // namespace

TheoremResult verify_theorem(const ColorConfig& cfg, const TheoremOptions& opts) {
  const auto reds = cfg.red_bodies();
  const auto blues = cfg.blue_bodies();
  SearchReport red_rep = find_line_transversal(reds, opts.search);
  SearchReport blue_rep = find_line_transversal(blues, opts.search);

  auto finish = [&](std::optional<AnyTransversalCert> red, std::optional<AnyTransversalCert> blue,
                    std::string how) -> TheoremResult {
    TheoremCert cert;
    cert.verdict = red && blue ? Verdict::Both : (red ? Verdict::Red : Verdict::Blue);
    cert.red = std::move(red);
    cert.blue = std::move(blue);
    cert.red_report = red_rep;
    cert.blue_report = blue_rep;
    cert.resolved_by = std::move(how);
    if (!verify_theorem_cert(cert, cfg)) throw std::logic_error("theorem certificate failed re-verification");
    return cert;
  };

  if (red_rep.found() || blue_rep.found()) return finish(red_rep.cert, blue_rep.cert, "enumeration");

  // Escalation 1: a color whose separation pattern fails has a transversal
  // through the hull witness.
  ProofTrace trace = diagnostic_chain(cfg);
  if (const auto* f = std::get_if<PatternFails>(&trace.red_pattern)) {
    if (auto c = line_from_pattern_failure(reds, *f)) return finish(AnyTransversalCert(*c), std::nullopt, "separation-witness");
  }
  if (const auto* f = std::get_if<PatternFails>(&trace.blue_pattern)) {
    if (auto c = line_from_pattern_failure(blues, *f)) return finish(std::nullopt, AnyTransversalCert(*c), "separation-witness");
  }

  // Escalation 2: denser direction lattices.
  std::size_t n = opts.oracle_start;
  for (std::size_t round = 0; round < opts.oracle_doublings; ++round, n *= 2) {
    AdaptiveOracleOptions ao;
    ao.base_count = n;
    auto r = adaptive_direction_oracle(reds, ao);
    red_rep.oracle_samples += r.samples;
    if (r.cert) return finish(AnyTransversalCert(*r.cert), std::nullopt, "oracle-refinement");
    auto b = adaptive_direction_oracle(blues, ao);
    blue_rep.oracle_samples += b.samples;
    if (b.cert) return finish(std::nullopt, AnyTransversalCert(*b.cert), "oracle-refinement");
  }

  // Escalation 3: search a perturbed copy and reuse its direction as a seed.
  std::mt19937_64 rng(opts.perturbation_seed);
  const SearchOptions no_oracle{0};
  for (std::size_t round = 0; round < opts.perturbation_rounds; ++round) {
    for (int color = 0; color < 2; ++color) {
      const auto& bodies = color == 0 ? reds : blues;
      auto rep = find_line_transversal(perturbed(bodies, rng), no_oracle);
      if (!rep.found()) continue;
      const std::span<const ConvexBody> span(bodies.data(), bodies.size());
      for (const Vec3& dir : directions_around(direction_of(*rep.cert), 1e-3, 512)) {
        if (auto c = transversal_with_direction(span, dir)) {
          return color == 0 ? finish(AnyTransversalCert(*c), std::nullopt, "perturbation")
                            : finish(std::nullopt, AnyTransversalCert(*c), "perturbation");
        }
      }
    }
  }
  return Unresolved{std::move(trace), std::move(red_rep), std::move(blue_rep)};
}

GenerationExhausted::GenerationExhausted(std::size_t tries)
    : std::runtime_error("no acceptable configuration after " + std::to_string(tries) + " draws") {}

bool degenerate_separation_normals(const ColorConfig& cfg) {
  const auto red = separation_pattern(cfg.red_bodies());
  const auto blue = separation_pattern(cfg.blue_bodies());
  for (const auto* pat : {&red, &blue}) {
    if (!holds(*pat)) continue;
    const auto& certs = std::get<FullPattern>(*pat).certs;
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t t = s + 1; t < 3; ++t)
        if (certs[s].half.normal == certs[t].half.normal) return true;
  }
  if (holds(red) && holds(blue)) {
    try {
      build_drawing(std::get<FullPattern>(blue).certs, std::get<FullPattern>(red).certs);
    } catch (const DegenerateDrawing&) {
      return true;
    }
  }
  return false;
}

namespace {

// Portable uniform integer in [-bound, bound] by rejection on raw output.
std::int64_t uniform_coord(std::mt19937_64& rng, std::int64_t bound) {
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % span) - bound;
}

}  // namespace

GeneratedConfig random_config(const GenSpec& spec) {
  if (spec.bound < 1) throw std::invalid_argument("coordinate bound must be >= 1");
  std::mt19937_64 rng(spec.seed);
  for (std::size_t attempt = 0; attempt < kGenerationRetries; ++attempt) {
    std::array<std::array<Vec3, 3>, 3> m;
    for (auto& row : m)
      for (auto& p : row)
        for (int c = 0; c < 3; ++c) p(c) = Rational(uniform_coord(rng, spec.bound));
    const ConfigReport rep = build_config(m);
    if (spec.policy == DegeneracyPolicy::KeepFlagged) return GeneratedConfig{rep.config, rep.flags, attempt};
    if (rep.flags.any() || degenerate_separation_normals(rep.config)) continue;
    return GeneratedConfig{rep.config, rep.flags, attempt};
  }
  throw GenerationExhausted(kGenerationRetries);
}

}  // namespace colorful
