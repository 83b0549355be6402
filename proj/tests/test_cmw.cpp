#include <doctest.h>

#include "helpers.hpp"
#include "kellerlab/cmw.hpp"
#include "kellerlab/harness.hpp"

using namespace kellerlab;
using kellerlab::testing::E;
using kellerlab::testing::P;

namespace {

UniPoly uni(std::initializer_list<long> cs) {
  std::vector<FieldElement> v;
  for (long c : cs) v.emplace_back(c);
  return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("univariate evaluation and printing") {
  UniPoly h = uni({5, 0, 1});  // 5 + t^2
  CHECK(h.evaluated_at(P("x + y^3")) == P("(x + y^3)^2 + 5"));
  CHECK(h.to_string() == "5 + t^2");
  CHECK(uni({0, 2, 0, 1}).to_string() == "2*t + t^3");
  CHECK(UniPoly::zero().to_string() == "0");
  CHECK(UniPoly(std::vector<FieldElement>{FieldElement(0)}).is_zero());
}

TEST_CASE("expressing R in k[A] for direct substitutions") {
  auto h = express_in(P("x"), P("x^3 + 2*x"));
  REQUIRE(h.has_value());
  CHECK(*h == uni({0, 2, 0, 1}));

  auto h2 = express_in(P("x + y^3"), P("(x + y^3)^2 + 5"));
  REQUIRE(h2.has_value());
  CHECK(*h2 == uni({5, 0, 1}));

  auto h3 = express_in(P("x + 4"), P("x^2 + 8*x + 9"));  // (x+4)^2 - 7
  REQUIRE(h3.has_value());
  CHECK(*h3 == uni({-7, 0, 1}));
}

TEST_CASE("membership failures return empty rather than throwing") {
  // Jac(x^2, x^3) = 0 but the degree ratio fails.
  CHECK(!express_in(P("x^2"), P("x^3")).has_value());
  // The first peel succeeds, then the remainder x^3 fails divisibility.
  CHECK(!express_in(P("x^2"), P("x^4 + x^3")).has_value());
}

TEST_CASE("a nonzero Jacobian violates the precondition") {
  CHECK_THROWS_AS(express_in(P("x"), P("y")), NonzeroJacobian);
}

TEST_CASE("round trip on random mates") {
  GenSpec spec;
  spec.seed = 303;
  for (int trial = 0; trial < 20; ++trial) {
    spec.label = "cmw/round" + std::to_string(trial);
    Poly A = random_tame(spec).endo.p;
    if (A.is_constant()) continue;
    SplitRng rng(GenSpec{spec.seed, 1, 1, 1, FieldMode::Rational, spec.label + "/h"});
    std::vector<FieldElement> cs;
    for (int k = 0; k <= 4; ++k) cs.emplace_back(rng.int_in(-5, 5));
    UniPoly h(std::move(cs));
    Poly R = h.evaluated_at(A);
    CHECK(jacobian(A, R).is_zero());
    auto back = express_in(A, R);
    REQUIRE(back.has_value());
    CHECK(*back == h);
  }
}

TEST_CASE("restriction of the exchange to the image subalgebra, symmetric p") {
  Endo f = E("x + y", "y");
  SubalgebraExpr e = alpha_restriction_check(f, AlphaRestrictionMode::SymmetricP);
  CHECK(e.h == uni({0, 1}));
  CHECK(e.alpha_p == P("x"));        // symbols: P in the x slot, Q in the y slot
  CHECK(e.alpha_q == P("-y + x"));   // -Q + H(P)
  CHECK(e.restricted_jacobian == FieldElement(-1));
  // Substitution oracle: alpha(q) really equals -q + H(p).
  Endo alpha = E("y", "x");
  CHECK(apply(alpha, f.q) == -f.q + e.h.evaluated_at(f.p));
}

TEST_CASE("restriction of the exchange to the image subalgebra, skew p") {
  Endo f = E("x - y", "-y");
  SubalgebraExpr e = alpha_restriction_check(f, AlphaRestrictionMode::SkewP);
  CHECK(e.h == uni({0, 1}));
  CHECK(e.alpha_p == P("-x"));
  CHECK(e.alpha_q == P("y - x"));  // Q - H(P)
  CHECK(e.restricted_jacobian == FieldElement(-1));
  Endo alpha = E("y", "x");
  CHECK(apply(alpha, f.q) == f.q - e.h.evaluated_at(f.p));
}

TEST_CASE("the restriction checker refuses unfit inputs") {
  CHECK_THROWS_AS(alpha_restriction_check(E("x^2", "y"), AlphaRestrictionMode::SymmetricP),
                  NotKeller);
  // Keller, but p is neither symmetric nor skew under the exchange.
  CHECK_THROWS_AS(alpha_restriction_check(E("x + y^2", "y"), AlphaRestrictionMode::SymmetricP),
                  PreconditionSymmetry);
}
