#ifndef COLORFUL_PIPELINE_HPP
#define COLORFUL_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "colorful/cones.hpp"
#include "colorful/convex.hpp"
#include "colorful/lemma.hpp"
#include "colorful/transversal.hpp"

namespace colorful {

enum class Verdict { Red, Blue, Both };

std::string to_string(Verdict v);

struct TheoremCert {
  Verdict verdict;
  std::optional<AnyTransversalCert> red;
  std::optional<AnyTransversalCert> blue;
  SearchReport red_report;
  SearchReport blue_report;
  /// "enumeration", "separation-witness", "oracle-refinement" or "perturbation".
  std::string resolved_by;
};

/// Re-verifies every contained certificate against the config's triangles.
bool verify_theorem_cert(const TheoremCert& cert, const ColorConfig& cfg);

enum class TraceStage {
  RedPatternFails,
  BluePatternFails,
  DegenerateDrawing,
  NoCrossing,
  LemmaPreconditionFails,
  Complete
};

std::string to_string(TraceStage s);

/// Walk through the impossibility argument. Anything past the separation
/// patterns is only reachable when both colors are fully separated, which
/// the theorem rules out; a Complete trace is a falsification artifact.
struct ProofTrace {
  ProofTrace(PatternResult red, PatternResult blue) : red_pattern(std::move(red)), blue_pattern(std::move(blue)) {}

  PatternResult red_pattern;
  PatternResult blue_pattern;
  TraceStage stage = TraceStage::RedPatternFails;
  std::string note;
  std::optional<SphereDrawing> drawing;
  std::optional<CrossingWitness> crossing;
  std::optional<LemmaInstance> lemma_instance;
  std::optional<std::size_t> violated_precondition;
  std::optional<LemmaVerdict> lemma_verdict;

  bool complete() const { return stage == TraceStage::Complete; }
};

/// The drawing, crossing and lemma steps from six separation certificates
/// and the matrix that labels the arcs. Usable with synthetic inputs.
void complete_chain(ProofTrace& trace, const std::array<SeparationCert, 3>& blue,
                    const std::array<SeparationCert, 3>& red, const ColorConfig& cfg);

ProofTrace diagnostic_chain(const ColorConfig& cfg);

/// Verify a line through the witness of "body i meets hull(others)".
std::optional<TransversalCert<Rational>> line_from_pattern_failure(const std::array<ConvexBody, 3>& bodies,
                                                                  const PatternFails& fail);

struct TheoremOptions {
  SearchOptions search{};
  /// Oracle refinement starts at this many directions and doubles.
  std::size_t oracle_start = 4096;
  std::size_t oracle_doublings = 4;
  std::size_t perturbation_rounds = 4;
  std::uint64_t perturbation_seed = 0x9e3779b97f4a7c15ULL;
};

struct Unresolved {
  ProofTrace trace;
  SearchReport red_report;
  SearchReport blue_report;
};

using TheoremResult = std::variant<TheoremCert, Unresolved>;

TheoremResult verify_theorem(const ColorConfig& cfg, const TheoremOptions& opts = {});

enum class DegeneracyPolicy { Reject, KeepFlagged };

struct GenSpec {
  std::uint64_t seed = 0;
  std::int64_t bound = 100;
  DegeneracyPolicy policy = DegeneracyPolicy::Reject;
};

class GenerationExhausted : public std::runtime_error {
 public:
  explicit GenerationExhausted(std::size_t tries);
};

struct GeneratedConfig {
  ColorConfig config;
  DegeneracyFlags flags;
  std::size_t retries = 0;
};

inline constexpr std::size_t kGenerationRetries = 1000;

/// True when some color is fully separated with coincident normals, or both
/// colors are and their normals do not form a valid drawing.
bool degenerate_separation_normals(const ColorConfig& cfg);

/// Integer points uniform in [-bound, bound]^3 from a seeded mt19937_64;
/// a pure function of its GenSpec.
GeneratedConfig random_config(const GenSpec& spec);

}  // namespace colorful

#endif  // COLORFUL_PIPELINE_HPP
