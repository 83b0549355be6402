#include <doctest.h>

#include "helpers.hpp"
#include "kellerlab/engines.hpp"
#include "kellerlab/harness.hpp"
#include "kellerlab/json_io.hpp"

using namespace kellerlab;
using kellerlab::testing::E;
using kellerlab::testing::P;

TEST_CASE("endomorphism JSON schema and round trip") {
  Endo f = E("x + y^3", "y");
  Json j = to_json(f);
  CHECK(j.at("p") == "y^3 + x");
  CHECK(j.at("q") == "y");
  CHECK(endo_from_json(j) == f);
}

TEST_CASE("certificates round-trip bit-exactly") {
  GenSpec spec;
  spec.seed = 606;
  spec.factor_count = 5;
  for (int trial = 0; trial < 10; ++trial) {
    spec.label = "json/cert" + std::to_string(trial);
    spec.field_mode = (trial % 2 == 0) ? FieldMode::Rational : FieldMode::Gaussian;
    TameCertificate cert = random_tame(spec).certificate;
    Json j = to_json(cert);
    TameCertificate back = certificate_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    CHECK(verify(back));
    CHECK(back.subject == cert.subject);
  }
}

TEST_CASE("factor kind tags") {
  Json j = to_json(Factor(ElementaryX{P("y^2 - 1"), FieldElement(3)}));
  CHECK(j.at("kind") == "elementary_x");
  CHECK(j.at("h") == "y^2 - 1");
  CHECK(j.at("scale") == "3");
  CHECK_THROWS_AS(factor_from_json(Json{{"kind", "mystery"}}), SyntaxError);
}

TEST_CASE("transcript JSON carries cases, witness, and certificates") {
  SymmetrizationTranscript t = symmetrize_deg2(E("x + y^2", "x + y + y^2"));
  Json j = to_json(t);
  CHECK(j.contains("case"));
  CHECK(j.at("involution") == t.target.name);
  CHECK(j.at("type") == "symmetric");
  REQUIRE(j.at("steps").is_array());
  for (const Json& s : j.at("steps")) {
    CHECK(s.contains("g"));
    CHECK(verify(certificate_from_json(s.at("certificate"))));
  }
}

TEST_CASE("parity and search reports serialize") {
  Json p = to_json(parity_classify(E("x + y^2", "y")));
  CHECK(p.at("applicable") == true);
  CHECK(p.at("axis01").at("involution") == "beta");
  CHECK(p.at("axis10").is_null());

  Json s = to_json(symmetrize_search(P("x + y^3"), 1, 3, 1));
  CHECK(s.at("found") == true);
  CHECK(s.at("witness") == "x");

  Json d = to_json(druzkowski2(P("y"), P("x")));
  CHECK(d.at("accepted") == false);
  CHECK(d.at("inverse").is_null());
}
