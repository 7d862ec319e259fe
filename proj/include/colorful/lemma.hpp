#ifndef COLORFUL_LEMMA_HPP
#define COLORFUL_LEMMA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "colorful/cones.hpp"
#include "colorful/convex.hpp"

namespace colorful {

/// Four halfspaces in E^n and two points. The hypotheses are
///   a in hA+ and hU+, a outside hW+ and hC+,
///   z in hW+ and hC+, z outside hA+ and hU+,
/// all strict, as checked by check_preconditions.
struct LemmaInstance {
  AnchoredHalfspace hA;
  AnchoredHalfspace hU;
  AnchoredHalfspace hW;
  AnchoredHalfspace hC;
  VecX a;
  VecX z;

  Eigen::Index dim() const { return a.size(); }
};

class PreconditionViolated : public std::runtime_error {
 public:
  explicit PreconditionViolated(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Order of the eight slack values and the sign each must have.
inline constexpr std::array<const char*, 8> kPreconditionNames = {
    "a.A - b_A", "a.U - b_U", "(a-p).W", "(a-p).C", "z.A - b_A", "z.U - b_U", "(z-p).W", "(z-p).C"};
inline constexpr std::array<int, 8> kPreconditionSigns = {+1, +1, -1, -1, -1, -1, +1, +1};

/// The eight slacks, in kPreconditionNames order. (x-p).W is evaluated as
/// x.W - b_W, which equals it for every p on the bounding hyperplane.
std::array<Rational, 8> precondition_slacks(const LemmaInstance& inst);

/// First slack with the wrong sign, if any.
std::optional<std::size_t> first_violation(const LemmaInstance& inst);

/// Returns the slacks, or throws PreconditionViolated naming the first
/// failing inequality.
std::array<Rational, 8> check_preconditions(const LemmaInstance& inst);

/// A point p with W.p = b_W and C.p = b_C (least-index pivoting), if the
/// two hyperplanes meet.
std::optional<VecX> anchor_point(const AnchoredHalfspace& w, const AnchoredHalfspace& c);

struct ConeDisjoint {
  FarkasCert<Rational> cert;
};

/// pos(A,U) and pos(W,C) meet: a counterexample, kept as an artifact.
struct LemmaFalsified {
  std::variant<ConeWitness, ConesApexOnly> evidence;
};

using LemmaVerdict = std::variant<ConeDisjoint, LemmaFalsified>;

inline bool confirmed(const LemmaVerdict& v) { return std::holds_alternative<ConeDisjoint>(v); }

Cone cone_AU(const LemmaInstance& inst);
Cone cone_WC(const LemmaInstance& inst);

/// Checks preconditions (throws PreconditionViolated), then decides whether
/// pos(A,U) and pos(W,C) meet.
LemmaVerdict verify_basic_lemma(const LemmaInstance& inst);

class InvalidWitness : public std::runtime_error {
 public:
  explicit InvalidWitness(const std::string& what) : std::runtime_error(what) {}
};

struct TraceStep {
  std::string inequality;
  Rational lhs;
  Rational rhs;
  bool holds;
};

/// Evaluation of the two inequality chains bounding eta.a and eta.z.
/// With beta_R = lambda_A b_A + lambda_U b_U and beta_S = mu_W b_W + mu_C b_C:
///   beta_R < eta.a < beta_S   and   beta_S < eta.z < beta_R.
struct ContradictionTrace {
  std::vector<TraceStep> steps;
  std::optional<VecX> anchor;  // the p of the human-readable chain
  /// All four chain links hold, so beta_R < beta_S < beta_R.
  bool contradiction = false;
  /// Index into steps of the first link that fails.
  std::optional<std::size_t> broken_at;
};

/// Requires w to be an arithmetically valid witness for pos(A,U) and
/// pos(W,C) (throws InvalidWitness otherwise). Does not require the
/// instance to satisfy the preconditions.
ContradictionTrace derive_contradiction(const LemmaInstance& inst, const ConeWitness& w);

/// Two pencils of open halfspaces with a in every R-halfspace and in no
/// S-halfspace (u.a <= c), and symmetrically for z.
struct PencilInstance {
  std::vector<AnchoredHalfspace> R;
  std::vector<AnchoredHalfspace> S;
  VecX a;
  VecX z;

  Eigen::Index dim() const { return a.size(); }
};

class MembershipViolated : public std::runtime_error {
 public:
  explicit MembershipViolated(const std::string& what) : std::runtime_error(what) {}
};

/// Empty when the membership pattern holds, else a description of the failure.
std::optional<std::string> pencil_violation(const PencilInstance& inst);

/// Throws MembershipViolated when the pattern fails.
LemmaVerdict verify_pencil_lemma(const PencilInstance& inst);

PencilInstance to_pencil(const LemmaInstance& inst);

}  // namespace colorful

#endif  // COLORFUL_LEMMA_HPP
