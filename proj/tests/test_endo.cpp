#include <doctest.h>

#include "helpers.hpp"
#include "kellerlab/endo.hpp"
#include "kellerlab/harness.hpp"

using namespace kellerlab;
using kellerlab::testing::E;
using kellerlab::testing::P;

TEST_CASE("apply substitutes the images") {
  CHECK(apply(E("x - y^3", "y"), P("x + y^3")) == P("x"));
  Poly r = P("x^2*y - 4*x + 1");
  CHECK(apply(Endo::identity(), r) == r);
  CHECK(apply(Endo::exchange(), P("x*y + 5")) == P("x*y + 5"));
}

TEST_CASE("composition follows the g-after-f convention") {
  // g = ((1/a)(x - y), (1/b) y) normalizes p = a*x + b*y + e to x + e.
  Endo g = E("(1/3)*(x - y)", "(1/5)*y");
  Endo f = E("3*x + 5*y + 7", "5*y");
  CHECK(compose(g, f).p == P("x + 7"));
  CHECK(compose(Endo::identity(), f) == f);
  CHECK(compose(f, Endo::identity()) == f);
}

TEST_CASE("apply is functorial over composition") {
  Endo g = E("x + y^2", "y"), f = E("2*x", "y - x");
  Poly r = P("x*y + y^3 - 2");
  CHECK(apply(compose(g, f), r) == apply(g, apply(f, r)));
}

TEST_CASE("composition is associative on random triples") {
  GenSpec spec;
  spec.seed = 31;
  // Small maps: the triple composition degree is the product of the three.
  spec.factor_count = 2;
  spec.max_elem_degree = 2;
  spec.degree_budget = 4;
  for (int trial = 0; trial < 10; ++trial) {
    spec.label = "endo/assoc" + std::to_string(trial);
    Endo a = random_tame(spec).endo;
    spec.label += "/b";
    Endo b = random_tame(spec).endo;
    spec.label += "/c";
    Endo c = random_tame(spec).endo;
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
  }
}

TEST_CASE("jacobian and the Keller predicate") {
  CHECK(jacobian_of(E("y", "x")) == P("-1"));
  CHECK(is_keller(E("y", "x")));
  CHECK(keller_constant(E("y", "x")) == FieldElement(-1));
  CHECK(jacobian_of(E("x^2", "y")) == P("2*x"));
  CHECK(!is_keller(E("x^2", "y")));
  CHECK_THROWS_AS(keller_constant(E("x^2", "y")), NotKeller);
  // (1)(1+2y) - (2y)(1) = 1.
  CHECK(jacobian_of(E("x + y^2", "x + y + y^2")) == P("1"));
}

TEST_CASE("chain rule on Keller pairs") {
  GenSpec spec;
  spec.seed = 41;
  for (int trial = 0; trial < 10; ++trial) {
    spec.label = "endo/chain" + std::to_string(trial);
    Endo f = random_tame(spec).endo;
    spec.label += "/g";
    Endo g = random_tame(spec).endo;
    CHECK(keller_constant(compose(g, f)) == keller_constant(g) * keller_constant(f));
  }
}

TEST_CASE("order detection") {
  CHECK(order(E("-x", "-y"), 4) == 2);
  CHECK(order(Endo::identity(), 4) == 1);
  CHECK(order(E("-x - y^2", "y"), 4) == 2);
  CHECK(order(E("x + 1", "y"), 4) == std::nullopt);
  CHECK(is_involution(E("-x - y^2", "-y")));
  CHECK(!is_involution(Endo::identity()));
}

TEST_CASE("textual form") {
  CHECK(E("x + y^3", "y").to_string() == "f: x -> y^3 + x; y -> y");
}
