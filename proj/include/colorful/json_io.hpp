#ifndef COLORFUL_JSON_IO_HPP
#define COLORFUL_JSON_IO_HPP

#include <json.hpp>

#include "colorful/cones.hpp"
#include "colorful/convex.hpp"
#include "colorful/lemma.hpp"
#include "colorful/pipeline.hpp"
#include "colorful/transversal.hpp"

// Every scalar is a "p/q" string; Q(sqrt D) values are {"a","b","d"}
// objects; rays are arrays of integers.
namespace colorful::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

json to_json(const Rational& x);
json to_json(const QuadScalar& x);
json to_json(const Ray& r);
json to_json(const AnchoredHalfspace& h);
json to_json(const FarkasCert<Rational>& c);

template <class Derived>
json vector_json(const Eigen::MatrixBase<Derived>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Rational rational_from(const json& j);
VecX vector_from(const json& j);
Ray ray_from(const json& j);
AnchoredHalfspace halfspace_from(const json& j);

json to_json(const ColorConfig& cfg);
ColorConfig config_from(const json& j);

json to_json(const SeparationCert& c);
json to_json(const PatternResult& p);
json to_json(const SphereDrawing& d);
json to_json(const ConeWitness& w);
json to_json(const CrossingWitness& c);

json to_json(const AnyTransversalCert& c);
AnyTransversalCert transversal_cert_from(const json& j);
json to_json(const SearchReport& r);

json to_json(const LemmaInstance& inst);
LemmaInstance lemma_instance_from(const json& j);
json to_json(const PencilInstance& inst);
PencilInstance pencil_instance_from(const json& j);
json to_json(const LemmaVerdict& v);
json to_json(const ContradictionTrace& t);

json to_json(const ProofTrace& t);
json to_json(const TheoremCert& c);
json to_json(const Unresolved& u);

/// Decides a lemma instance file: basic (hA,hU,hW,hC,a,z) or pencil (R,S,a,z).
json lemma_verdict_json(const json& instance);

}  // namespace colorful::io

#endif  // COLORFUL_JSON_IO_HPP
