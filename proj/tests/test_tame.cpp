#include <doctest.h>

#include "helpers.hpp"
#include "kellerlab/harness.hpp"
#include "kellerlab/tame.hpp"

using namespace kellerlab;
using kellerlab::testing::E;
using kellerlab::testing::P;

TEST_CASE("a linear map decomposes into a single affine factor") {
  DecomposeResult r = decompose(E("y", "x"));
  REQUIRE(r.ok());
  REQUIRE(r.certificate->factors.size() == 1);
  CHECK(r.certificate->factors[0].is_affine());
  CHECK(verify(*r.certificate));
}

TEST_CASE("an elementary map decomposes and inverts") {
  Endo f = E("x + y^3", "y");
  DecomposeResult r = decompose(f);
  REQUIRE(r.ok());
  CHECK(verify(*r.certificate));
  CHECK(invert(*r.certificate) == E("x - y^3", "y"));
}

TEST_CASE("diagonal map inverts to reciprocal scales") {
  DecomposeResult r = decompose(E("2*x", "3*y"));
  REQUIRE(r.ok());
  CHECK(invert(*r.certificate) == E("(1/2)*x", "(1/3)*y"));
}

TEST_CASE("non-Keller and stuck inputs are rejected, not mangled") {
  CHECK(decompose(E("x^2", "y")).status == DecomposeStatus::NotKeller);
  CHECK(decompose(E("x", "x*y + 1")).status == DecomposeStatus::NotKeller);
}

TEST_CASE("random products recompose to their inputs") {
  GenSpec spec;
  spec.seed = 7;
  spec.factor_count = 5;
  for (int trial = 0; trial < 10; ++trial) {
    spec.label = "tame/recompose" + std::to_string(trial);
    TameSample s = random_tame(spec);
    // Oracle: the by-construction certificate.
    CHECK(verify(s.certificate));
    CHECK(recompose(s.certificate) == s.endo);
    DecomposeResult r = decompose(s.endo);
    REQUIRE(r.ok());
    CHECK(verify(*r.certificate));
    CHECK(recompose(*r.certificate) == s.endo);
  }
}

TEST_CASE("round trip: inverse from the certificate is two-sided") {
  GenSpec spec;
  spec.seed = 11;
  spec.factor_count = 4;
  const Endo id = Endo::identity();
  for (int trial = 0; trial < 25; ++trial) {
    spec.label = "tame/roundtrip" + std::to_string(trial);
    spec.field_mode = (trial % 2 == 0) ? FieldMode::Rational : FieldMode::Gaussian;
    TameSample s = random_tame(spec);
    DecomposeResult r = decompose(s.endo);
    REQUIRE(r.ok());
    Endo inv = invert(*r.certificate);
    CHECK(compose(inv, s.endo) == id);
    CHECK(compose(s.endo, inv) == id);
    CHECK(keller_constant(inv) * keller_constant(s.endo) == FieldElement::one());
  }
}

TEST_CASE("inversion is a group anti-homomorphism") {
  Endo f = E("x + y^2", "y"), g = E("y", "x + 1");
  auto rf = decompose(f), rg = decompose(g), rgf = decompose(compose(g, f));
  REQUIRE((rf.ok() && rg.ok() && rgf.ok()));
  CHECK(invert(*rgf.certificate) ==
        compose(invert(*rf.certificate), invert(*rg.certificate)));
}

TEST_CASE("verify fails on a broken product and invert flags corruption") {
  TameSample s = random_tame(GenSpec{3, 4, 3, 3, FieldMode::Rational, "tame/broken"});
  TameCertificate broken = s.certificate;
  REQUIRE(broken.factors.size() > 1);
  broken.factors.pop_back();
  CHECK(!verify(broken));
  CHECK_THROWS_AS(invert(broken), CorruptCertificate);
}

TEST_CASE("a hand-built certificate for (x+e, a*y+H(x)) verifies") {
  AffineFactor shift;
  shift.m[0][0] = FieldElement(1);
  shift.m[0][1] = FieldElement(0);
  shift.m[1][0] = FieldElement(0);
  shift.m[1][1] = FieldElement(1);
  shift.t[0] = FieldElement(7);
  shift.t[1] = FieldElement(0);
  Factor a = Factor::affine(shift);
  Factor e = Factor(ElementaryY{P("x^2 - x"), FieldElement(3)});
  TameCertificate cert;
  cert.factors = {e, a};
  cert.subject = compose(e.to_endo(), a.to_endo());
  CHECK(verify(cert));
  CHECK(cert.subject.p == P("x + 7"));
  CHECK(cert.subject.q == P("3*y + x^2 - x"));
}

TEST_CASE("factor construction validates invertibility") {
  AffineFactor sing;
  sing.m[0][0] = FieldElement(1);
  sing.m[0][1] = FieldElement(2);
  sing.m[1][0] = FieldElement(2);
  sing.m[1][1] = FieldElement(4);
  sing.t[0] = sing.t[1] = FieldElement(0);
  CHECK_THROWS(Factor::affine(sing));
  CHECK_THROWS(Factor(ElementaryX{P("y^2"), FieldElement(0)}));
  CHECK_THROWS(Factor(ElementaryX{P("x*y"), FieldElement(1)}));  // h not univariate
}

TEST_CASE("every factor inverts within its own kind") {
  GenSpec spec{13, 6, 3, 4, FieldMode::Gaussian, "tame/factorinv"};
  TameSample s = random_tame(spec);
  const Endo id = Endo::identity();
  for (const Factor& f : s.certificate.factors) {
    Factor g = f.inverted();
    CHECK(f.kind().index() == g.kind().index());
    CHECK(compose(f.to_endo(), g.to_endo()) == id);
    CHECK(compose(g.to_endo(), f.to_endo()) == id);
  }
}
