#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "simplexlab/mmm.hpp"
#include "simplexlab/width.hpp"

using namespace simplexlab;

namespace {

void check_certificate(const CyclicSimplexSpec& spec, const WidthCertificate& cert) {
  CHECK(spec.lattice().dual_member(cert.functional));
  CHECK(cert.functional != std::array<std::int64_t, 4>{0, 0, 0, 0});
  std::int64_t mx = cert.vertex_values[0], mn = cert.vertex_values[0];
  for (std::int64_t v : cert.vertex_values) {
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  CHECK(mx - mn == cert.width);
  for (std::size_t i = 0; i < 4; ++i) CHECK(cert.vertex_values[i + 1] == cert.functional[i]);
  CHECK(cert.vertex_values[0] == 0);
}

}  // namespace

TEST_CASE("width of the unimodular spec") {
  WidthCertificate cert = width(CyclicSimplexSpec(1, {0, 0, 0, 0}));
  CHECK(cert.width == 1);
  CHECK(cert.optimal);
  // documented tie-break: lexicographically least with positive first nonzero
  CHECK(cert.functional == std::array<std::int64_t, 4>{0, 0, 0, 1});
}

TEST_CASE("width of the order-5 empty spec") {
  CyclicSimplexSpec spec(5, {1, 2, 3, 4});
  WidthCertificate cert = width(spec);
  CHECK(cert.width == 1);
  CHECK(cert.optimal);
  check_certificate(spec, cert);
  CHECK(oracle::brute_width(spec, 2) == 1);
  // the tie-break selects (0,1,1,0) among the optimal functionals
  CHECK(cert.functional == std::array<std::int64_t, 4>{0, 1, 1, 0});
}

TEST_CASE("width of the determinant-65 simplex is three") {
  // (0,1,3,-1) pairs to zero with (6,14,17,65): 14 + 3*17 - 65 = 0, so the
  // spread over the vertices is 3; the complete search and the brute oracle
  // agree it is optimal.
  CyclicSimplexSpec spec(65, {59, 51, 48, 1});
  WidthCertificate cert = width(spec);
  CHECK(cert.width == 3);
  check_certificate(spec, cert);
  CHECK(oracle::brute_width(spec, 4) == 3);
}

TEST_CASE("width of the determinant-101 simplex is four") {
  CyclicSimplexSpec spec(101, {95, 87, 84, 1});
  WidthCertificate cert = width(spec);
  CHECK(cert.width == 4);
  check_certificate(spec, cert);
  CHECK(oracle::brute_width(spec, 5) == 4);
  CHECK(is_empty(spec).empty);
}

TEST_CASE("width_general") {
  GeneralSimplex unit = {{{{0, 0, 0, 0},
                           {1, 0, 0, 0},
                           {0, 1, 0, 0},
                           {0, 0, 1, 0},
                           {0, 0, 0, 1}}}};
  CHECK(width_general(unit).width == 1);

  GeneralSimplex det65 = unit;
  det65.vertices[4] = {6, 14, 17, 65};
  WidthCertificate cert = width_general(det65);
  CHECK(cert.width == 3);
  CHECK(cert.optimal);

  GeneralSimplex det101 = unit;
  det101.vertices[4] = {6, 14, 17, 101};
  CHECK(width_general(det101).width == 4);

  GeneralSimplex flat = unit;
  flat.vertices[4] = {1, 1, 0, 0};
  flat.vertices[3] = {2, 0, 0, 0};
  CHECK_THROWS_AS(width_general(flat), std::invalid_argument);
}

TEST_CASE("width_general agrees with the standard-form route") {
  std::mt19937_64 rng(64209);
  std::vector<CyclicSimplexSpec> specs = {
      CyclicSimplexSpec(5, {1, 2, 3, 4}),
      CyclicSimplexSpec(65, {59, 51, 48, 1}),
      CyclicSimplexSpec(7, {2, 1, 5, 4}),
      CyclicSimplexSpec(20, {1, 19, 3, 17}),
  };
  for (const CyclicSimplexSpec& spec : specs) {
    GeneralSimplex s = oracle::embed_spec(spec, rng);
    StandardForm sf = to_standard_form(s, 0);
    REQUIRE(sf.spec.has_value());
    CHECK(width_general(s).width == width(*sf.spec).width);
    CHECK(width(*sf.spec).width == width(spec).width);
  }
}

TEST_CASE("width is invariant under unit scaling") {
  for (std::int64_t n : {13, 20, 36}) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 17);
    std::uniform_int_distribution<std::int64_t> vd(0, n - 1);
    int done = 0;
    while (done < 6) {
      std::array<std::int64_t, 4> a = {vd(rng), vd(rng), vd(rng), vd(rng)};
      if (gcd_i64(gcd_i64(gcd_i64(gcd_i64(a[0], a[1]), a[2]), a[3]), n) != 1) continue;
      ++done;
      std::int64_t w = width(CyclicSimplexSpec(n, a)).width;
      for (std::int64_t u = 1; u < n; ++u) {
        if (gcd_i64(u, n) != 1) continue;
        std::array<std::int64_t, 4> ua;
        for (std::size_t i = 0; i < 4; ++i) ua[i] = u * a[i] % n;
        CHECK(width(CyclicSimplexSpec(n, ua)).width == w);
      }
    }
  }
}

TEST_CASE("functional_from_relation spec cases") {
  SUBCASE("dropped entry already zero") {
    RelationFunctional rf =
        functional_from_relation({9, 1, -2, -3, -5}, {0, 2, 1, 0, 0}, 5);
    CHECK(rf.functional == std::array<std::int64_t, 4>{0, 2, 1, 0});
    CHECK(rf.vertex_values == std::array<std::int64_t, 5>{0, 0, 2, 1, 0});
    CHECK(rf.spread == 2);
  }
  SUBCASE("family i relation gives spread one") {
    RelationFunctional rf =
        functional_from_relation({1, -1, 2, 3, -5}, {1, 1, 0, 0, 0}, 5);
    CHECK(rf.functional == std::array<std::int64_t, 4>{1, 1, 0, 0});
    CHECK(rf.spread == 1);
  }
  SUBCASE("dropped entry one shifts into {-1,0,1}") {
    RelationFunctional rf =
        functional_from_relation({12, 3, -4, -5, -6}, {0, 2, 0, 0, 1}, 5);
    CHECK(rf.functional == std::array<std::int64_t, 4>{-1, 1, -1, -1});
    CHECK(rf.vertex_values == std::array<std::int64_t, 5>{0, -1, 1, -1, -1});
    CHECK(rf.spread == 2);
    // orthogonality after the shift: -12 + 3 + 4 + 5 = 0
  }
  SUBCASE("dropped entry two flips the relation") {
    RelationFunctional rf =
        functional_from_relation({9, 1, -2, -3, -5}, {1, 1, 0, 0, 2}, 5);
    CHECK(rf.functional == std::array<std::int64_t, 4>{1, 1, 2, 2});
    CHECK(rf.spread == 2);
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(functional_from_relation({9, 1, -2, -3, -5}, {0, 3, 0, 0, 0}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(functional_from_relation({9, 1, -2, -3, -5}, {1, 0, 0, 0, 0}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(functional_from_relation({9, 1, -2, -3, -5}, {0, 2, 1, 0, 0}, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(functional_from_relation({1, 1, 1, 1, -4}, {0, 2, 1, 0, 0}, 5),
                    std::invalid_argument);
    // (1,1,1,1,1) is orthogonal to any zero-sum quintuple but collapses
    CHECK_THROWS_AS(functional_from_relation({9, 1, -2, -3, -5}, {1, 1, 1, 1, 1}, 5),
                    std::invalid_argument);
  }
}

TEST_CASE("random certificates revalidate") {
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<std::int64_t> nd(2, 40);
  int done = 0;
  while (done < 30) {
    std::int64_t n = nd(rng);
    std::uniform_int_distribution<std::int64_t> vd(0, n - 1);
    std::array<std::int64_t, 4> a = {vd(rng), vd(rng), vd(rng), vd(rng)};
    if (gcd_i64(gcd_i64(gcd_i64(gcd_i64(a[0], a[1]), a[2]), a[3]), n) != 1) continue;
    ++done;
    CyclicSimplexSpec spec(n, a);
    WidthCertificate cert = width(spec);
    check_certificate(spec, cert);
    CHECK(cert.width >= 1);
    CHECK(cert.width == oracle::brute_width(spec, cert.width));
  }
}
