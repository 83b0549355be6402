#include <doctest.h>

#include "helpers.hpp"
#include "kellerlab/harness.hpp"
#include "kellerlab/json_io.hpp"

using namespace kellerlab;

TEST_CASE("identical specs give identical output") {
  GenSpec spec{42, 5, 3, 4, FieldMode::Gaussian, "harness/det"};
  TameSample a = random_tame(spec);
  TameSample b = random_tame(spec);
  CHECK(a.endo == b.endo);
  Json ja{{"map", to_json(a.endo)}, {"certificate", to_json(a.certificate)}};
  Json jb{{"map", to_json(b.endo)}, {"certificate", to_json(b.certificate)}};
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("distinct labels draw from independent streams") {
  GenSpec a{42, 5, 3, 4, FieldMode::Rational, "harness/stream-a"};
  GenSpec b{42, 5, 3, 4, FieldMode::Rational, "harness/stream-b"};
  CHECK(random_tame(a).endo != random_tame(b).endo);
}

TEST_CASE("every generated map is Keller with a valid certificate") {
  GenSpec spec;
  spec.seed = 9;
  for (int trial = 0; trial < 15; ++trial) {
    spec.label = "harness/keller" + std::to_string(trial);
    spec.field_mode = (trial % 3 == 0) ? FieldMode::Gaussian : FieldMode::Rational;
    TameSample s = random_tame(spec);
    CHECK(is_keller(s.endo));
    CHECK(verify(s.certificate));
    CHECK(s.certificate.factors.size() == spec.factor_count);
    // Jacobian equals the product of the factor Jacobian constants.
    FieldElement prod = FieldElement::one();
    for (const Factor& f : s.certificate.factors)
      prod = prod * keller_constant(f.to_endo());
    CHECK(keller_constant(s.endo) == prod);
  }
}

TEST_CASE("quadratic-x rejection sampling respects its predicate") {
  GenSpec spec;
  spec.seed = 2024;
  for (int trial = 0; trial < 10; ++trial) {
    spec.label = "harness/quadx" + std::to_string(trial);
    TameSample s = random_keller_with_quadratic_x(spec);
    CHECK(s.endo.p.degree_or(0) <= 2);
    CHECK(is_keller(s.endo));
  }
}

TEST_CASE("factor count must be positive") {
  GenSpec spec;
  spec.factor_count = 0;
  CHECK_THROWS(random_tame(spec));
}

TEST_CASE("conjugated involutions keep order two and class") {
  GenSpec spec{55, 3, 2, 2, FieldMode::Rational, "harness/inv"};
  Involution s = random_involution(spec, "alpha");
  CHECK(compose(s.endo, s.endo) == Endo::identity());
  CHECK(classify_involution(s.endo) == ConjClass::Cminus1);
  Involution t = random_involution(spec, "epsilon");
  CHECK(classify_involution(t.endo) == ConjClass::Cplus1);
}
