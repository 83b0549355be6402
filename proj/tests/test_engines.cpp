#include <doctest.h>

#include "helpers.hpp"
#include "kellerlab/engines.hpp"
#include "kellerlab/harness.hpp"

using namespace kellerlab;
using kellerlab::testing::E;
using kellerlab::testing::P;

TEST_CASE("degree-1 reduction normalizes and inverts") {
  Degree1Result r = degree1_reduce(E("3*x + 5*y + 7", "x + 2*y"));
  CHECK(r.normalized.p == P("x + 7"));
  const Endo id = Endo::identity();
  CHECK(compose(r.inverse, E("3*x + 5*y + 7", "x + 2*y")) == id);

  CHECK(degree1_reduce(E("x", "y + x^5")).inverse == E("x", "y - x^5"));
  CHECK(degree1_reduce(E("x + 1", "3*y + x^2")).inverse ==
        E("x - 1", "(1/3)*(y - (x-1)^2)"));
  // deg q = 1 routes through the exchange.
  CHECK(compose(degree1_reduce(E("y + x^3", "x")).inverse, E("y + x^3", "x")) == id);
}

TEST_CASE("degree-1 reduction rejects unfit inputs") {
  CHECK_THROWS_AS(degree1_reduce(E("x^2", "y")), NotKeller);
  CHECK_THROWS_AS(degree1_reduce(E("x + y^2", "x + y + y^2")), DegreeMismatch);
}

TEST_CASE("the quadratic special case inverts") {
  Endo f = E("x + y^2", "x + y + y^2");
  WangResult r = wang_special(f);
  CHECK(r.branch == "quadratic-cancel");
  REQUIRE(r.right_move.has_value());
  CHECK(compose(r.inverse, f) == Endo::identity());
  // Hand-solved inverse: x = p - (q - p)^2, y = q - p.
  CHECK(r.inverse == E("x - (y - x)^2", "y - x"));

  WangResult aff = wang_special(E("x + y + 1", "y - 2"));
  CHECK(compose(aff.inverse, E("x + y + 1", "y - 2")) == Endo::identity());

  WangResult mu0 = wang_special(E("x + y^2", "y + 5"));
  CHECK(mu0.branch == "mu=0");
  CHECK(compose(mu0.inverse, E("x + y^2", "y + 5")) == Endo::identity());
}

TEST_CASE("case tree: degree-1 images") {
  auto t1 = symmetrize_cases(P("4*x + 9"));
  CHECK(t1.case_label == "First.b=0");
  CHECK(t1.target.name == "beta");
  CHECK(t1.steps.empty());

  auto t2 = symmetrize_cases(P("5*y - 1"));
  CHECK(t2.case_label == "First.a=0");
  CHECK(t2.target.name == "gamma");

  auto t3 = symmetrize_cases(P("2*x + 3*y + 4"));
  CHECK(t3.case_label == "First.ab!=0");
  CHECK(t3.target.name == "alpha");
  CHECK(symmetry_type(t3.witness, t3.target) == SymmetryType::Symmetric);
}

TEST_CASE("case tree: both square terms absent") {
  auto i1 = symmetrize_cases(P("3*x*y + 7"));
  CHECK(i1.case_label == "I(1)");
  CHECK(i1.steps.empty());
  CHECK(i1.witness == P("3*x*y + 7"));

  auto i2 = symmetrize_cases(P("2*x*y + 3*x"));
  CHECK(i2.case_label == "I(2)");
  REQUIRE(i2.steps.size() == 1);
  CHECK(i2.steps[0].g == E("x", "(1/2)*y - 3/2"));
  CHECK(i2.witness == P("x*y"));
  CHECK(i2.target.name == "alpha");

  CHECK(symmetrize_cases(P("2*x*y + 3*y")).case_label == "I(3)");
  CHECK(symmetrize_cases(P("x*y + 2*x + 5*y + 1")).case_label == "I(4)");
}

TEST_CASE("case tree: one square term present") {
  CHECK(symmetrize_cases(P("x^2 + 3")).case_label == "II(1).d=e=0");
  CHECK(symmetrize_cases(P("x^2 + 2*x + 3")).case_label == "II(1).e=0");
  CHECK(symmetrize_cases(P("x^2 + 5*y")).case_label == "II(1).d=0");
  CHECK(symmetrize_cases(P("x^2 + 2*x + 5*y")).case_label == "II(1).d,e!=0");
  // The mirror (a = 0, c != 0) pre-composes the exchange.
  auto mirror = symmetrize_cases(P("y^2 + 2*y + 5*x"));
  CHECK(mirror.case_label == "II(1).d,e!=0");
  CHECK(!mirror.steps.empty());

  auto ii2 = symmetrize_cases(P("x^2 + 3*x*y + x + 2"));
  CHECK(ii2.case_label == "II(2)");
  CHECK(symmetry_type(ii2.witness, ii2.target) == SymmetryType::Symmetric);
}

TEST_CASE("case tree: both square terms present") {
  auto iii1 = symmetrize_cases(P("x^2 + 4*y^2 + x + y + 1"));
  CHECK(iii1.case_label == "III(1)");
  CHECK(symmetry_type(iii1.witness, iii1.target) == SymmetryType::Symmetric);

  auto tnz = symmetrize_cases(P("x^2 + x*y + y^2 + x"));
  CHECK(tnz.case_label == "III(2).tnz");
  CHECK(symmetry_type(tnz.witness, tnz.target) == SymmetryType::Symmetric);

  CHECK(symmetrize_cases(P("x^2 + 2*x*y + y^2 + x")).case_label == "III(2).t0.B+2");
  CHECK(symmetrize_cases(P("x^2 - 2*x*y + y^2 + x")).case_label == "III(2).t0.B-2");
}

TEST_CASE("real mode refuses the branches that need i or mixed signs") {
  CHECK_THROWS_AS(symmetrize_cases(P("x^2 + 3*x*y + 1"), true), RealModeViolation);
  CHECK_THROWS_AS(symmetrize_cases(P("x^2 - y^2 + x"), true), RealModeViolation);
  CHECK_THROWS_AS(symmetrize_cases(P("x^2 + 3*x*y + y^2 + x"), true), RealModeViolation);
  // Both coefficients negative: handled by working with -p's radicands.
  auto neg = symmetrize_cases(P("-x^2 - y^2 + x + y"), true);
  CHECK(neg.case_label == "III(1)");
  CHECK(symmetry_type(neg.witness, neg.target) == SymmetryType::Symmetric);
  // Positive-definite cross term inside the real bound works.
  auto ok = symmetrize_cases(P("x^2 + x*y + y^2"), true);
  CHECK(ok.case_label == "III(2).tnz");
}

TEST_CASE("the full pipeline ties transcripts to Keller maps") {
  Endo f = E("x + y^2", "x + y + y^2");
  SymmetrizationTranscript t = symmetrize_deg2(f);
  Endo acc = f;
  for (const auto& step : t.steps) {
    CHECK(verify(step.certificate));
    acc = compose(step.g, acc);
  }
  CHECK(acc.p == t.witness);
  CHECK(t.target.cls == ConjClass::Cminus1);
  CHECK_THROWS_AS(symmetrize_deg2(E("x^2", "y")), NotKeller);
}

TEST_CASE("inversion via the symmetry route matches direct decomposition") {
  Endo f = E("x + y^2", "x + y + y^2");
  CHECK(invert_via_symmetry(f) == E("x - (y - x)^2", "y - x"));
  Endo aff = E("2*x + y", "x + y");
  CHECK(compose(invert_via_symmetry(aff), aff) == Endo::identity());
}

TEST_CASE("parity classification on Keller maps") {
  ParityReport r = parity_classify(E("x + y^2", "y"));
  REQUIRE(r.axis01.has_value());
  CHECK(r.axis01->involution == "beta");
  CHECK(r.axis01->type == SymmetryType::Symmetric);
  CHECK(!r.axis10.has_value());

  ParityReport s = parity_classify(E("x", "y + x^2"));
  REQUIRE(s.axis01.has_value());  // p = x has y-degree 0 everywhere
  CHECK(s.axis01->type == SymmetryType::Symmetric);
  REQUIRE(s.axis10.has_value());
  CHECK(s.axis10->involution == "gamma");
  CHECK(s.axis10->type == SymmetryType::Skew);

  CHECK(!parity_classify(E("x + y^3 + y^2", "y")).applicable());
}

TEST_CASE("parity reports agree with substitution") {
  GenSpec spec;
  spec.seed = 404;
  for (int trial = 0; trial < 20; ++trial) {
    spec.label = "engines/parity" + std::to_string(trial);
    Endo f = random_tame(spec).endo;
    ParityReport r = parity_classify(f);
    if (r.axis01) {
      Poly img = apply(builtin_involution("beta").endo, f.p);
      CHECK(img == (r.axis01->type == SymmetryType::Symmetric ? f.p : -f.p));
    }
    if (r.axis10) {
      Poly img = apply(builtin_involution("gamma").endo, f.p);
      CHECK(img == (r.axis10->type == SymmetryType::Symmetric ? f.p : -f.p));
    }
  }
}

TEST_CASE("the bounded search finds the cubic example") {
  SearchResult r = symmetrize_search(P("x + y^3"), 1, 3, 1);
  REQUIRE(r.found);
  REQUIRE(r.moves.size() == 1);
  CHECK(r.moves[0] == E("x - y^3", "y"));
  CHECK(r.witness == P("x"));
  CHECK(r.type == SymmetryType::Symmetric);

  SearchResult trivial = symmetrize_search(P("x*y"), 1, 3, 1);
  CHECK(trivial.found);
  CHECK(trivial.moves.empty());
  CHECK(trivial.involution == "alpha");

  SearchResult capped = symmetrize_search(P("x + y^3"), 1, 2, 1);
  CHECK(!capped.found);
}

TEST_CASE("search respects its state cap") {
  CHECK_THROWS_AS(symmetrize_search(P("x^2 + y^5 + x*y"), 2, 3, 2, 50), ResourceLimit);
}

TEST_CASE("cubic-linear maps at n = 2") {
  DruzkowskiResult r = druzkowski2(P("y"), Poly::zero());
  CHECK(r.accepted);
  CHECK(r.map == E("x + y^3", "y"));
  REQUIRE(r.inverse.has_value());
  CHECK(*r.inverse == E("x - y^3", "y"));

  DruzkowskiResult id = druzkowski2(Poly::zero(), Poly::zero());
  CHECK(id.accepted);
  CHECK(id.map == Endo::identity());

  DruzkowskiResult rej = druzkowski2(P("y"), P("x"));
  CHECK(!rej.accepted);
  CHECK(rej.jacobian == P("1 - 9*x^2*y^2"));
  CHECK(!rej.inverse.has_value());

  CHECK_THROWS(druzkowski2(P("x + 1"), Poly::zero()));
}
