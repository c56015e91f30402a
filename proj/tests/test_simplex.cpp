#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "simplexlab/simplex.hpp"
#include "simplexlab/width.hpp"

using namespace simplexlab;

namespace {

const GeneralSimplex kUnit = {{{{0, 0, 0, 0},
                                {1, 0, 0, 0},
                                {0, 1, 0, 0},
                                {0, 0, 1, 0},
                                {0, 0, 0, 1}}}};

const GeneralSimplex kDet65 = {{{{0, 0, 0, 0},
                                 {1, 0, 0, 0},
                                 {0, 1, 0, 0},
                                 {0, 0, 1, 0},
                                 {6, 14, 17, 65}}}};

}  // namespace

TEST_CASE("simplex text round trip") {
  std::string text = "# demo\n0 0 0 0\n1 0 0 0\n\n0 1 0 0 # inline\n0 0 1 0\n6 14 17 65\n";
  GeneralSimplex s = parse_simplex_text(text);
  CHECK(s == kDet65);
  CHECK(parse_simplex_text(format_simplex_text(s)) == s);

  CHECK_THROWS_AS(parse_simplex_text("1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_simplex_text("1 2 3 x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_simplex_text(format_simplex_text(s) + "0 0 0 0\n"),
                  std::invalid_argument);
}

TEST_CASE("spec construction validates the generator") {
  CHECK_THROWS_AS(CyclicSimplexSpec(5, {5, 10, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicSimplexSpec(0, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicSimplexSpec(4, {0, 2, 2, 2}), std::invalid_argument);
  CyclicSimplexSpec ok(5, {6, -3, 3, 4});
  CHECK(ok.gen() == std::array<std::int64_t, 4>{1, 2, 3, 4});
  CyclicSimplexSpec one(1, {0, 0, 0, 0});
  CHECK(one.det() == 1);
}

TEST_CASE("standard form of the unit simplex") {
  StandardForm sf = to_standard_form(kUnit, 0);
  REQUIRE(sf.spec.has_value());
  CHECK(sf.spec->det() == 1);
  CHECK(sf.group.order == 1);
}

TEST_CASE("standard form of the width-example simplex") {
  StandardForm sf = to_standard_form(kDet65, 0);
  REQUIRE(sf.spec.has_value());
  CHECK(sf.spec->det() == 65);
  // from inverting the edge matrix: (1/65)(-6,-14,-17,1)
  CHECK(sf.spec->gen() == std::array<std::int64_t, 4>{59, 51, 48, 1});
  CHECK(sf.group.invariant_factors == std::vector<std::int64_t>{65});
}

TEST_CASE("standard form flags non-cyclic quotients structurally") {
  GeneralSimplex doubled = kUnit;
  for (std::size_t i = 1; i < 5; ++i)
    for (auto& c : doubled.vertices[i]) c *= 2;
  StandardForm sf = to_standard_form(doubled, 0);
  CHECK_FALSE(sf.spec.has_value());
  CHECK(sf.group.invariant_factors == std::vector<std::int64_t>{2, 2, 2, 2});
  CHECK(sf.group.order == 16);
  CHECK_FALSE(is_empty_general(sf.lattice).empty);
}

TEST_CASE("standard form rejects degenerate simplices") {
  GeneralSimplex flat = kUnit;
  flat.vertices[4] = {1, 1, 0, 0};  // in the span of e1, e2
  flat.vertices[3] = {1, -1, 0, 0};
  CHECK_THROWS_AS(to_standard_form(flat, 0), std::invalid_argument);
  CHECK_THROWS_AS(to_standard_form(kUnit, 7), std::invalid_argument);
}

TEST_CASE("emptiness of cyclic specs") {
  CHECK(is_empty(CyclicSimplexSpec(1, {0, 0, 0, 0})).empty);
  CHECK(is_empty(CyclicSimplexSpec(5, {1, 2, 3, 4})).empty);

  EmptinessResult bad = is_empty(CyclicSimplexSpec(5, {1, 1, 1, 1}));
  REQUIRE_FALSE(bad.empty);
  CHECK(bad.witness->k == 1);
  for (const Rational& c : bad.witness->point) CHECK(c == Rational(1, 5));

  CHECK(is_empty(CyclicSimplexSpec(65, {59, 51, 48, 1})).empty);
}

TEST_CASE("emptiness over general lattices") {
  CHECK(is_empty_general(SuperLattice::integers(4)).empty);
  CHECK(is_empty_general(SuperLattice(4, 2, {{1, 1, 1, 1}})).empty);

  SuperLattice d33(4, 3, {{1, 2, 0, 0}, {0, 0, 1, 2}});
  EmptinessResult res = is_empty_general(d33);
  REQUIRE_FALSE(res.empty);
  // witness is a sum-at-most-one non-vertex point; (1/3,2/3,0,0) is one such
  // point and must be among the failing cosets
  Rational sum(0, 1);
  bool nonzero = false;
  for (const Rational& c : res.witness->point) {
    CHECK(c >= Rational(0, 1));
    CHECK(c < Rational(1, 1));
    sum = sum + c;
    nonzero = nonzero || !(c == Rational(0, 1));
  }
  CHECK(sum <= Rational(1, 1));
  CHECK(nonzero);
  CHECK_FALSE(oracle::closure_is_empty(3, {{1, 2, 0, 0}, {0, 0, 1, 2}}));
}

TEST_CASE("two emptiness routes agree exhaustively at small determinants") {
  for (std::int64_t n = 1; n <= 25; ++n) {
    std::array<std::int64_t, 4> a{};
    for (a[0] = 0; a[0] < n; ++a[0])
      for (a[1] = a[0]; a[1] < n; ++a[1])
        for (a[2] = a[1]; a[2] < n; ++a[2])
          for (a[3] = a[2]; a[3] < n; ++a[3]) {
            if (gcd_i64(gcd_i64(gcd_i64(gcd_i64(a[0], a[1]), a[2]), a[3]), n) != 1) continue;
            CyclicSimplexSpec spec(n, a);
            CHECK(is_empty(spec).empty == is_empty_general(spec.lattice()).empty);
          }
  }
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(CyclicSimplexSpec(5, {1, 2, 3, 4})) ==
        CanonicalForm{5, {0, 1, 2, 3, 4}});
  CHECK(canonical_form(CyclicSimplexSpec(1, {0, 0, 0, 0})) ==
        CanonicalForm{1, {0, 0, 0, 0, 0}});
  CHECK(canonicalize_tuple(5, {9, 1, -2, -3, -5}) ==
        canonicalize_tuple(5, {2 * 9, 2 * 1, -4, -6, -10}));
}

TEST_CASE("emptiness is invariant under unit scaling") {
  for (std::int64_t n : {7, 12, 20}) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<std::int64_t> vd(0, n - 1);
    for (int t = 0; t < 20; ++t) {
      std::array<std::int64_t, 4> a = {vd(rng), vd(rng), vd(rng), vd(rng)};
      if (gcd_i64(gcd_i64(gcd_i64(gcd_i64(a[0], a[1]), a[2]), a[3]), n) != 1) continue;
      CyclicSimplexSpec spec(n, a);
      bool e = is_empty(spec).empty;
      for (std::int64_t u = 1; u < n; ++u) {
        if (gcd_i64(u, n) != 1) continue;
        std::array<std::int64_t, 4> ua;
        for (std::size_t i = 0; i < 4; ++i) ua[i] = u * a[i] % n;
        CyclicSimplexSpec scaled(n, ua);
        CHECK(is_empty(scaled).empty == e);
        CHECK(canonical_form(scaled) == canonical_form(spec));
      }
    }
  }
}

TEST_CASE("standard form is invariant under unimodular transforms") {
  std::mt19937_64 rng(112358);
  StandardForm base = to_standard_form(kDet65, 0);
  CanonicalForm canon = canonical_form(*base.spec);
  std::int64_t w = width(*base.spec).width;
  for (int t = 0; t < 20; ++t) {
    GeneralSimplex moved = oracle::embed_spec(*base.spec, rng);
    StandardForm sf = to_standard_form(moved, 0);
    REQUIRE(sf.spec.has_value());
    CHECK(canonical_form(*sf.spec) == canon);
    CHECK(is_empty(*sf.spec).empty);
    CHECK(width(*sf.spec).width == w);
  }
}

TEST_CASE("standard form is pivot independent") {
  std::vector<GeneralSimplex> samples = {kUnit, kDet65};
  std::mt19937_64 rng(314159);
  samples.push_back(oracle::embed_spec(CyclicSimplexSpec(12, {1, 5, 7, 11}), rng));
  for (const GeneralSimplex& s : samples) {
    StandardForm first = to_standard_form(s, 0);
    REQUIRE(first.spec.has_value());
    CanonicalForm canon = canonical_form(*first.spec);
    for (int pivot = 1; pivot < 5; ++pivot) {
      StandardForm sf = to_standard_form(s, pivot);
      REQUIRE(sf.spec.has_value());
      CHECK(canonical_form(*sf.spec) == canon);
    }
  }
}

TEST_CASE("dimension-5 counterexample lattices") {
  SUBCASE("p=3") {
    SuperLattice d = dim5_counterexample(3, 1, 1);
    CHECK(d.group_structure().invariant_factors == std::vector<std::int64_t>{3, 3});
    CHECK(is_empty_general(d).empty);
    CHECK(oracle::closure_is_empty(3, {{1, -1, 0, 0, 1}, {0, 0, 1, -1, 1}}));
  }
  SUBCASE("p=5") {
    SuperLattice d = dim5_counterexample(5, 2, 3);
    CHECK(d.group_structure().invariant_factors == std::vector<std::int64_t>{5, 5});
    CHECK(is_empty_general(d).empty);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(dim5_counterexample(3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(dim5_counterexample(3, 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(dim5_counterexample(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(dim5_counterexample(2, 1, 1), std::invalid_argument);
  }
}

TEST_CASE("witness invariants on non-empty specs") {
  std::mt19937_64 rng(55555);
  std::uniform_int_distribution<std::int64_t> nd(2, 60);
  int found = 0;
  while (found < 40) {
    std::int64_t n = nd(rng);
    std::uniform_int_distribution<std::int64_t> vd(0, n - 1);
    std::array<std::int64_t, 4> a = {vd(rng), vd(rng), vd(rng), vd(rng)};
    if (gcd_i64(gcd_i64(gcd_i64(gcd_i64(a[0], a[1]), a[2]), a[3]), n) != 1) continue;
    EmptinessResult res = is_empty(CyclicSimplexSpec(n, a));
    if (res.empty) continue;
    ++found;
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->k >= 1);
    CHECK(res.witness->k < n);
    Rational sum(0, 1);
    bool nonzero = false;
    for (const Rational& c : res.witness->point) {
      CHECK(c >= Rational(0, 1));
      CHECK(c < Rational(1, 1));
      sum = sum + c;
      nonzero = nonzero || c != Rational(0, 1);
    }
    CHECK(sum <= Rational(1, 1));
    CHECK(nonzero);  // the point is in D but not in Z^4
    // matches k times the generator
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(res.witness->point[i] == Rational(res.witness->k * a[i] % n, n));
  }
}
