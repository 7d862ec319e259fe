#include "colorful/json_io.hpp"

#include <limits>

namespace colorful::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T, class F>
json list_json(const std::vector<T>& xs, F f) {
  json out = json::array();
  for (const T& x : xs) out.push_back(f(x));
  return out;
}

json rationals_json(const std::vector<Rational>& xs) {
  return list_json(xs, [](const Rational& x) { return to_json(x); });
}

json quads_json(const std::vector<QuadScalar>& xs) {
  return list_json(xs, [](const QuadScalar& x) { return to_json(x); });
}

json point_json(const Vec3& p) { return vector_json(p); }

json body_json(const ConvexBody& b) { return list_json(b.vertices, point_json); }

QuadScalar quad_from(const json& j) {
  if (j.is_string()) return QuadScalar(rational_from(j));
  return QuadScalar(rational_from(field(j, "a")), rational_from(field(j, "b")), rational_from(field(j, "d")));
}

Vec3 point_from(const json& j) {
  VecX v = vector_from(j);
  if (v.size() != 3) throw FormatError("expected a point with 3 coordinates");
  return to_vec3(v);
}

template <class K>
json line_json(const PluckerLine<K>& l) {
  return json{{"d", vector_json(l.d)}, {"m", vector_json(l.m)}};
}

template <class K>
json cert_json(const TransversalCert<K>& c, const char* field_name) {
  json proofs = json::array();
  for (const auto& p : c.proofs) {
    if constexpr (std::is_same_v<K, Rational>)
      proofs.push_back(rationals_json(p.weights));
    else
      proofs.push_back(quads_json(p.weights));
  }
  return json{{"field", field_name}, {"line", line_json(c.line)}, {"proofs", proofs}};
}

template <class K, class F>
TransversalCert<K> cert_from(const json& j, F scalar) {
  TransversalCert<K> c;
  const json& line = field(j, "line");
  const json& d = field(line, "d");
  const json& m = field(line, "m");
  if (!d.is_array() || !m.is_array() || d.size() != 3 || m.size() != 3)
    throw FormatError("line coordinates must be two triples");
  for (int k = 0; k < 3; ++k) {
    c.line.d(k) = scalar(d[static_cast<std::size_t>(k)]);
    c.line.m(k) = scalar(m[static_cast<std::size_t>(k)]);
  }
  for (const json& p : field(j, "proofs")) {
    StabProof<K> proof;
    for (const json& w : p) proof.weights.push_back(scalar(w));
    c.proofs.push_back(std::move(proof));
  }
  return c;
}

json farkas_or_null(const LemmaVerdict& v) {
  if (const auto* d = std::get_if<ConeDisjoint>(&v)) return to_json(d->cert);
  return nullptr;
}

json falsified_evidence(const LemmaFalsified& f) {
  if (const auto* w = std::get_if<ConeWitness>(&f.evidence)) return to_json(*w);
  const auto& apex = std::get<ConesApexOnly>(f.evidence);
  return json{{"apex_only", true}, {"lambda", rationals_json(apex.lambda)}, {"mu", rationals_json(apex.mu)}};
}

}  // namespace

json to_json(const Rational& x) { return to_string(x); }

json to_json(const QuadScalar& x) {
  if (x.is_rational()) return to_string(x.a());
  return json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", to_string(x.d())}};
}

json to_json(const Ray& r) {
  json out = json::array();
  for (Eigen::Index i = 0; i < r.dim(); ++i) {
    const auto n = boost::multiprecision::numerator(r.vec()(i));
    // Components beyond 64 bits stay exact as decimal strings.
    if (boost::multiprecision::abs(n) < Integer(std::numeric_limits<long long>::max()))
      out.push_back(n.convert_to<long long>());
    else
      out.push_back(n.str());
  }
  return out;
}

json to_json(const AnchoredHalfspace& h) { return json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}}; }

json to_json(const FarkasCert<Rational>& c) { return rationals_json(c.multipliers); }

Rational rational_from(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw FormatError("scalars must be \"p/q\" strings");
}

VecX vector_from(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("expected a nonempty array of scalars");
  VecX v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from(j[i]);
  return v;
}

Ray ray_from(const json& j) {
  try {
    return Ray(vector_from(j));
  } catch (const ZeroVector& e) {
    throw FormatError(e.what());
  }
}

AnchoredHalfspace halfspace_from(const json& j) {
  // The stored normal is kept as given if already primitive; otherwise the
  // offset is rescaled with it so the halfspace is unchanged.
  const VecX n = vector_from(field(j, "normal"));
  const Rational off = rational_from(field(j, "offset"));
  Ray r = ray_from(field(j, "normal"));
  Eigen::Index k = 0;
  while (is_zero(n(k))) ++k;
  const Rational scale = r.vec()(k) / n(k);
  return AnchoredHalfspace{std::move(r), off * scale};
}

json to_json(const ColorConfig& cfg) {
  json rows = json::array();
  for (const auto& row : cfg.matrix) {
    json r = json::array();
    for (const auto& p : row) r.push_back(point_json(p));
    rows.push_back(r);
  }
  return json{{"matrix", rows}};
}

ColorConfig config_from(const json& j) {
  const json& m = field(j, "matrix");
  if (!m.is_array() || m.size() != 3) throw FormatError("matrix must have 3 rows");
  ColorConfig cfg;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!m[i].is_array() || m[i].size() != 3) throw FormatError("matrix rows must have 3 points");
    for (std::size_t k = 0; k < 3; ++k) cfg.matrix[i][k] = point_from(m[i][k]);
  }
  return cfg;
}

json to_json(const SeparationCert& c) {
  return json{{"halfspace", to_json(c.half)},
              {"inside", body_json(c.inside)},
              {"outside", body_json(c.outside)},
              {"inside_margins", rationals_json(c.inside_margins)},
              {"outside_margins", rationals_json(c.outside_margins)}};
}

json to_json(const PatternResult& p) {
  if (const auto* full = std::get_if<FullPattern>(&p)) {
    json certs = json::array();
    for (const auto& c : full->certs) certs.push_back(to_json(c));
    return json{{"holds", true}, {"separations", certs}};
  }
  const auto& f = std::get<PatternFails>(p);
  return json{{"holds", false},
              {"index", f.index},
              {"point", point_json(f.witness.point)},
              {"weights_body", rationals_json(f.witness.weights_p)},
              {"weights_others", rationals_json(f.witness.weights_q)}};
}

json to_json(const SphereDrawing& d) {
  json blue = json::array(), red = json::array(), arcs = json::array();
  for (const auto& r : d.blue) blue.push_back(to_json(r));
  for (const auto& r : d.red) red.push_back(to_json(r));
  for (const Arc& a : d.arcs()) arcs.push_back(json{{"label", a.label()}, {"blue", a.blue}, {"red", a.red}});
  return json{{"blue", blue}, {"red", red}, {"arcs", arcs}};
}

json to_json(const ConeWitness& w) {
  return json{{"eta", to_json(w.eta)}, {"lambda", rationals_json(w.lambda)}, {"mu", rationals_json(w.mu)}};
}

json to_json(const CrossingWitness& c) {
  return json{{"first", c.first.label()}, {"second", c.second.label()}, {"witness", to_json(c.witness)}};
}

json to_json(const AnyTransversalCert& c) {
  if (const auto* r = std::get_if<TransversalCert<Rational>>(&c)) return cert_json(*r, "rational");
  return cert_json(std::get<TransversalCert<QuadScalar>>(c), "quadratic");
}

AnyTransversalCert transversal_cert_from(const json& j) {
  const std::string f = field(j, "field").get<std::string>();
  if (f == "rational") return cert_from<Rational>(j, rational_from);
  if (f == "quadratic") return cert_from<QuadScalar>(j, quad_from);
  throw FormatError("unknown field \"" + f + "\"");
}

json to_json(const SearchReport& r) {
  return json{{"candidates_examined", r.candidates_examined},
              {"degenerate_skipped", r.degenerate_skipped},
              {"oracle_samples", r.oracle_samples},
              {"found_by", r.found() ? json(r.found_by) : json(nullptr)}};
}

json to_json(const LemmaInstance& inst) {
  return json{{"hA", to_json(inst.hA)}, {"hU", to_json(inst.hU)}, {"hW", to_json(inst.hW)},
              {"hC", to_json(inst.hC)}, {"a", vector_json(inst.a)},  {"z", vector_json(inst.z)}};
}

LemmaInstance lemma_instance_from(const json& j) {
  return LemmaInstance{halfspace_from(field(j, "hA")), halfspace_from(field(j, "hU")),
                       halfspace_from(field(j, "hW")), halfspace_from(field(j, "hC")),
                       vector_from(field(j, "a")),     vector_from(field(j, "z"))};
}

json to_json(const PencilInstance& inst) {
  auto hs = [](const AnchoredHalfspace& h) { return to_json(h); };
  return json{{"R", list_json(inst.R, hs)}, {"S", list_json(inst.S, hs)}, {"a", vector_json(inst.a)},
              {"z", vector_json(inst.z)}};
}

PencilInstance pencil_instance_from(const json& j) {
  PencilInstance inst;
  for (const json& h : field(j, "R")) inst.R.push_back(halfspace_from(h));
  for (const json& h : field(j, "S")) inst.S.push_back(halfspace_from(h));
  inst.a = vector_from(field(j, "a"));
  inst.z = vector_from(field(j, "z"));
  return inst;
}

json to_json(const LemmaVerdict& v) {
  if (confirmed(v)) return json{{"verdict", "disjoint"}, {"farkas", farkas_or_null(v)}};
  return json{{"verdict", "falsified"}, {"witness", falsified_evidence(std::get<LemmaFalsified>(v))}};
}

json to_json(const ContradictionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back(json{{"inequality", s.inequality},
                         {"lhs", to_json(s.lhs)},
                         {"rhs", to_json(s.rhs)},
                         {"verdict", s.holds ? "holds" : "fails"}});
  json out{{"steps", steps}, {"contradiction", t.contradiction}};
  out["anchor"] = t.anchor ? vector_json(*t.anchor) : json(nullptr);
  out["broken_at"] = t.broken_at ? json(*t.broken_at) : json(nullptr);
  return out;
}

json to_json(const ProofTrace& t) {
  json out{{"stage", to_string(t.stage)},
           {"note", t.note},
           {"red_pattern", to_json(t.red_pattern)},
           {"blue_pattern", to_json(t.blue_pattern)}};
  if (t.drawing) out["drawing"] = to_json(*t.drawing);
  if (t.crossing) out["crossing"] = to_json(*t.crossing);
  if (t.lemma_instance) out["lemma_instance"] = to_json(*t.lemma_instance);
  if (t.violated_precondition) out["violated_precondition"] = kPreconditionNames[*t.violated_precondition];
  if (t.lemma_verdict) out["lemma_verdict"] = to_json(*t.lemma_verdict);
  return out;
}

json to_json(const TheoremCert& c) {
  return json{{"status", "resolved"},
              {"verdict", to_string(c.verdict)},
              {"resolved_by", c.resolved_by},
              {"red", c.red ? to_json(*c.red) : json(nullptr)},
              {"blue", c.blue ? to_json(*c.blue) : json(nullptr)},
              {"search", {{"red", to_json(c.red_report)}, {"blue", to_json(c.blue_report)}}}};
}

json to_json(const Unresolved& u) {
  return json{{"status", "unresolved"},
              {"trace", to_json(u.trace)},
              {"search", {{"red", to_json(u.red_report)}, {"blue", to_json(u.blue_report)}}}};
}

json lemma_verdict_json(const json& instance) {
  if (instance.contains("R") || instance.contains("S")) {
    const PencilInstance inst = pencil_instance_from(instance);
    json out{{"kind", "pencil"}, {"r", inst.R.size()}, {"s", inst.S.size()}, {"dim", inst.dim()}};
    if (auto why = pencil_violation(inst)) {
      out["verdict"] = "membership_violated";
      out["reason"] = *why;
      return out;
    }
    out.update(to_json(verify_pencil_lemma(inst)));
    return out;
  }
  const LemmaInstance inst = lemma_instance_from(instance);
  json out{{"kind", "basic"}, {"dim", inst.dim()}};
  const auto slacks = precondition_slacks(inst);
  json sl = json::object();
  for (std::size_t k = 0; k < 8; ++k) sl[kPreconditionNames[k]] = to_json(slacks[k]);
  out["slacks"] = sl;
  if (auto k = first_violation(inst)) {
    out["verdict"] = "precondition_violated";
    out["violated"] = kPreconditionNames[*k];
    return out;
  }
  const LemmaVerdict v = verify_basic_lemma(inst);
  out.update(to_json(v));
  if (const auto* f = std::get_if<LemmaFalsified>(&v))
    if (const auto* w = std::get_if<ConeWitness>(&f->evidence)) out["chain"] = to_json(derive_contradiction(inst, *w));
  return out;
}

}  // namespace colorful::io
