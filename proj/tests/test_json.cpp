#include <doctest.h>

#include "colorful/json_io.hpp"
#include "oracles.hpp"

using namespace colorful;
using io::json;

TEST_CASE("scalars use the p/q encoding") {
  CHECK(io::to_json(Rational(-3, 2)) == json("-3/2"));
  CHECK(io::to_json(Rational(4)) == json("4/1"));
  CHECK(io::rational_from(json("6/-4")) == Rational(-3, 2));
  CHECK(io::rational_from(json("7")) == Rational(7));
  CHECK_THROWS_AS(io::rational_from(json(0.5)), io::FormatError);
  CHECK_THROWS_AS(io::rational_from(json("1/0")), io::FormatError);
  CHECK(io::to_json(QuadScalar(Rational(1, 2), 0, 5)) == json("1/2"));
  const json q = io::to_json(QuadScalar(1, -2, 3));
  CHECK(q == json{{"a", "1/1"}, {"b", "-2/1"}, {"d", "3/1"}});
  CHECK(io::to_json(Ray(vec3(2, -4, 6))) == json::array({1, -2, 3}));
}

TEST_CASE("halfspaces keep their meaning when the normal is canonicalized") {
  const json j = {{"normal", {"2", "0", "-4"}}, {"offset", "3"}};
  const AnchoredHalfspace h = io::halfspace_from(j);
  CHECK(h.normal.vec3() == vec3(1, 0, -2));
  CHECK(h.offset == Rational(3, 2));
  CHECK(io::halfspace_from(io::to_json(h)).offset == h.offset);
  CHECK_THROWS_AS(io::halfspace_from(json{{"normal", {"1", "2"}}}), io::FormatError);
}

TEST_CASE("configs round trip") {
  std::mt19937_64 rng(81);
  for (int it = 0; it < 50; ++it) {
    std::array<std::array<Vec3, 3>, 3> m;
    for (auto& row : m)
      for (auto& p : row) p = oracle::random_int_vec3(rng, 100) / Rational(1 + it % 4);
    const ColorConfig cfg = build_config(m).config;
    const json j = io::to_json(cfg);
    CHECK(io::config_from(json::parse(j.dump())) == cfg);
  }
  CHECK_THROWS_AS(io::config_from(json{{"matrix", json::array()}}), io::FormatError);
  CHECK_THROWS_AS(io::config_from(json::object()), io::FormatError);
}

TEST_CASE("transversal certificates round trip in both fields") {
  const ConvexBody t0{{vec3(1, 0, -1), vec3(1, 3, -1), vec3(1, 0, 1)}};
  const ConvexBody t1{{vec3(2, 0, -2), vec3(2, 6, -2), vec3(2, 0, 2)}};
  const ConvexBody t2{{vec3(3, 0, -3), vec3(3, 9, -3), vec3(3, 0, 3)}};
  const std::array<ConvexBody, 3> bodies{t0, t1, t2};
  const std::span<const ConvexBody> span(bodies);
  const PluckerLine<QuadScalar> irr{Vec3T<QuadScalar>(QuadScalar(1), QuadScalar(0, 1, 2), QuadScalar(0)),
                                    Vec3T<QuadScalar>::Zero()};
  const auto qc = certify_line(irr, span);
  REQUIRE(qc);
  const auto rc = certify_line(PluckerLine<Rational>{vec3(1, 1, 0), vec3(0, 0, 0)}, span);
  REQUIRE(rc);
  for (const AnyTransversalCert& c : {AnyTransversalCert(*qc), AnyTransversalCert(*rc)}) {
    const json j = io::to_json(c);
    const AnyTransversalCert back = io::transversal_cert_from(json::parse(j.dump()));
    CHECK(back.index() == c.index());
    CHECK(verify_transversal(back, bodies));
    CHECK(io::to_json(back) == j);
  }
  CHECK(io::to_json(AnyTransversalCert(*qc))["field"] == "quadratic");
  json bad = io::to_json(AnyTransversalCert(*rc));
  bad["field"] = "complex";
  CHECK_THROWS_AS(io::transversal_cert_from(bad), io::FormatError);
}

TEST_CASE("lemma instances round trip and decide by shape") {
  const LemmaInstance inst{AnchoredHalfspace{Ray(vec3(1, 0, 0)), 0}, AnchoredHalfspace{Ray(vec3(0, 1, 0)), 0},
                           AnchoredHalfspace{Ray(vec3(-1, 0, 0)), -2}, AnchoredHalfspace{Ray(vec3(0, -1, 0)), -2},
                           to_vecx(vec3(3, 3, 0)), to_vecx(vec3(-1, -1, 0))};
  const json j = io::to_json(inst);
  const LemmaInstance back = io::lemma_instance_from(json::parse(j.dump()));
  CHECK(precondition_slacks(back) == precondition_slacks(inst));
  const json v = io::lemma_verdict_json(j);
  CHECK(v["kind"] == "basic");
  CHECK(v["verdict"] == "disjoint");
  CHECK(v["slacks"]["a.A - b_A"] == "3/1");

  const PencilInstance p = to_pencil(inst);
  const json pj = io::to_json(p);
  const PencilInstance pb = io::pencil_instance_from(json::parse(pj.dump()));
  CHECK(pb.R.size() == 2);
  CHECK(pb.S[1].offset == Rational(-2));
  const json pv = io::lemma_verdict_json(pj);
  CHECK(pv["kind"] == "pencil");
  CHECK(pv["verdict"] == "disjoint");

  LemmaInstance bad = inst;
  bad.a = to_vecx(vec3(1, 1, 0));
  const json bv = io::lemma_verdict_json(io::to_json(bad));
  CHECK(bv["verdict"] == "precondition_violated");
  CHECK(bv["violated"] == kPreconditionNames[2]);
}

TEST_CASE("theorem certificates serialize with status and search reports") {
  const ColorConfig cfg = random_config(GenSpec{5, 50, DegeneracyPolicy::Reject}).config;
  auto r = verify_theorem(cfg);
  REQUIRE(std::holds_alternative<TheoremCert>(r));
  const json j = io::to_json(std::get<TheoremCert>(r));
  CHECK(j["status"] == "resolved");
  CHECK(j["search"].contains("red"));
  CHECK(j["search"].contains("blue"));
  const auto& c = std::get<TheoremCert>(r);
  if (c.red) CHECK(verify_transversal(io::transversal_cert_from(j["red"]), cfg.red_bodies()));
  if (c.blue) CHECK(verify_transversal(io::transversal_cert_from(j["blue"]), cfg.blue_bodies()));
}
