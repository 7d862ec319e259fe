#include "colorful/lemma.hpp"

namespace colorful {

PreconditionViolated::PreconditionViolated(std::size_t index)
    : std::runtime_error(std::string("lemma precondition violated: ") + kPreconditionNames.at(index) +
                         (kPreconditionSigns.at(index) > 0 ? " must be > 0" : " must be < 0")),
      index_(index) {}

std::array<Rational, 8> precondition_slacks(const LemmaInstance& inst) {
  return {inst.hA.slack(inst.a), inst.hU.slack(inst.a), inst.hW.slack(inst.a), inst.hC.slack(inst.a),
          inst.hA.slack(inst.z), inst.hU.slack(inst.z), inst.hW.slack(inst.z), inst.hC.slack(inst.z)};
}

std::optional<std::size_t> first_violation(const LemmaInstance& inst) {
  for (const auto* h : {&inst.hA, &inst.hU, &inst.hW, &inst.hC})
    if (h->normal.dim() != inst.a.size() || inst.z.size() != inst.a.size())
      throw std::invalid_argument("lemma instance mixes dimensions");
  const auto s = precondition_slacks(inst);
  for (std::size_t k = 0; k < 8; ++k)
    if (s[k].sign() != kPreconditionSigns[k]) return k;
  return std::nullopt;
}

std::array<Rational, 8> check_preconditions(const LemmaInstance& inst) {
  if (auto k = first_violation(inst)) throw PreconditionViolated(*k);
  return precondition_slacks(inst);
}

std::optional<VecX> anchor_point(const AnchoredHalfspace& w, const AnchoredHalfspace& c) {
  const Eigen::Index n = w.normal.dim();
  MatX m(2, n + 1);
  m.row(0).head(n) = w.normal.vec().transpose();
  m(0, n) = w.offset;
  m.row(1).head(n) = c.normal.vec().transpose();
  m(1, n) = c.offset;
  // Row-reduce [W b_W; C b_C]; free variables are set to zero.
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < 2; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < 2; ++i)
      if (!is_zero(m(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.row(p).swap(m.row(row));
    m.row(row) /= Rational(m(row, col));
    for (Eigen::Index i = 0; i < 2; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const Rational f = m(i, col);
      m.row(i) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  for (Eigen::Index i = row; i < 2; ++i)
    if (!is_zero(m(i, n))) return std::nullopt;
  VecX p = VecX::Zero(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) p(pivots[k]) = m(static_cast<Eigen::Index>(k), n);
  return p;
}

Cone cone_AU(const LemmaInstance& inst) { return Cone{{inst.hA.normal, inst.hU.normal}}; }
Cone cone_WC(const LemmaInstance& inst) { return Cone{{inst.hW.normal, inst.hC.normal}}; }

namespace {

LemmaVerdict decide(const Cone& r, const Cone& s) {
  auto res = cones_intersect(r, s);
  if (auto* d = std::get_if<ConesDisjoint>(&res)) return ConeDisjoint{std::move(d->cert)};
  if (auto* hit = std::get_if<ConesIntersect>(&res)) return LemmaFalsified{std::move(hit->witness)};
  return LemmaFalsified{std::get<ConesApexOnly>(res)};
}

}  // namespace

LemmaVerdict verify_basic_lemma(const LemmaInstance& inst) {
  check_preconditions(inst);
  return decide(cone_AU(inst), cone_WC(inst));
}

ContradictionTrace derive_contradiction(const LemmaInstance& inst, const ConeWitness& w) {
  const Cone au = cone_AU(inst);
  const Cone wc = cone_WC(inst);
  if (!w.verify(au, wc))
    throw InvalidWitness("witness is not a strictly positive common point of pos(A,U) and pos(W,C)");

  const VecX eta = w.lambda[0] * inst.hA.normal.vec() + w.lambda[1] * inst.hU.normal.vec();
  const Rational beta_r = w.lambda[0] * inst.hA.offset + w.lambda[1] * inst.hU.offset;
  const Rational beta_s = w.mu[0] * inst.hW.offset + w.mu[1] * inst.hC.offset;
  const Rational eta_a = eta.dot(inst.a);
  const Rational eta_z = eta.dot(inst.z);

  ContradictionTrace trace;
  trace.anchor = anchor_point(inst.hW, inst.hC);
  trace.steps.push_back({"eta.a > lambda.b (a in hA+, hU+)", eta_a, beta_r, eta_a > beta_r});
  trace.steps.push_back({"eta.a < mu.b = eta.p (a outside hW+, hC+)", eta_a, beta_s, eta_a < beta_s});
  trace.steps.push_back({"eta.z > mu.b = eta.p (z in hW+, hC+)", eta_z, beta_s, eta_z > beta_s});
  trace.steps.push_back({"eta.z < lambda.b (z outside hA+, hU+)", eta_z, beta_r, eta_z < beta_r});
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    if (!trace.steps[k].holds) {
      trace.broken_at = k;
      break;
    }
  }
  trace.contradiction = !trace.broken_at.has_value();
  // The two chain conclusions; both holding at once is the contradiction.
  trace.steps.push_back({"lambda.b < mu.b (chain through a)", beta_r, beta_s, beta_r < beta_s});
  trace.steps.push_back({"mu.b < lambda.b (chain through z)", beta_s, beta_r, beta_s < beta_r});
  return trace;
}

std::optional<std::string> pencil_violation(const PencilInstance& inst) {
  if (inst.R.empty() || inst.S.empty()) return "pencils must be nonempty";
  if (inst.a.size() != inst.z.size()) return "points differ in dimension";
  for (const auto* fam : {&inst.R, &inst.S})
    for (const auto& h : *fam)
      if (h.normal.dim() != inst.a.size()) return "halfspace dimension mismatch";
  for (std::size_t i = 0; i < inst.R.size(); ++i) {
    if (!inst.R[i].contains(inst.a)) return "a is not in R[" + std::to_string(i) + "]";
    if (inst.R[i].contains(inst.z)) return "z is in R[" + std::to_string(i) + "]";
  }
  for (std::size_t j = 0; j < inst.S.size(); ++j) {
    if (!inst.S[j].contains(inst.z)) return "z is not in S[" + std::to_string(j) + "]";
    if (inst.S[j].contains(inst.a)) return "a is in S[" + std::to_string(j) + "]";
  }
  return std::nullopt;
}

LemmaVerdict verify_pencil_lemma(const PencilInstance& inst) {
  if (auto why = pencil_violation(inst)) throw MembershipViolated(*why);
  Cone r, s;
  for (const auto& h : inst.R) r.generators.push_back(h.normal);
  for (const auto& h : inst.S) s.generators.push_back(h.normal);
  return decide(r, s);
}

PencilInstance to_pencil(const LemmaInstance& inst) { return PencilInstance{{inst.hA, inst.hU}, {inst.hW, inst.hC}, inst.a, inst.z}; }

}  // namespace colorful
