#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplexlab/lattice.hpp"
#include "simplexlab/rational.hpp"

namespace simplexlab {

// A 4-simplex with integer vertices. Nondegeneracy (independent edge
// vectors) is checked by the operations that need it, not by the type.
struct GeneralSimplex {
  std::array<std::array<std::int64_t, 4>, 5> vertices{};

  bool operator==(const GeneralSimplex&) const = default;
};

// Text format: five data lines of four whitespace-separated integers,
// '#' starts a comment, blank lines ignored.
GeneralSimplex parse_simplex_text(std::string_view text);
GeneralSimplex load_simplex_file(const std::filesystem::path& path);
std::string format_simplex_text(const GeneralSimplex& s);

// The standard simplex conv(0, e1..e4) inside D = Z^4 + Z*(1/N)(a1..a4).
// N is the simplex determinant and the order of the cyclic group D/Z^4.
class CyclicSimplexSpec {
 public:
  CyclicSimplexSpec(std::int64_t det, std::array<std::int64_t, 4> gen);

  std::int64_t det() const { return n_; }
  const std::array<std::int64_t, 4>& gen() const { return a_; }

  SuperLattice lattice() const;

  bool operator==(const CyclicSimplexSpec&) const = default;

 private:
  std::int64_t n_;
  std::array<std::int64_t, 4> a_;
};

// Class invariant of a cyclic spec under the full symmetry group: extend the
// residues by a5 = -(a1+..+a4) mod N, scale by every unit mod N, sort; keep
// the lexicographic minimum. Two specs describe lattice-equivalent simplices
// exactly when their canonical forms agree.
struct CanonicalForm {
  std::int64_t n = 1;
  std::array<std::int64_t, 5> tuple{};

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
  std::string str() const;
};

CanonicalForm canonicalize_tuple(std::int64_t n, std::array<std::int64_t, 5> tuple);
CanonicalForm canonical_form(const CyclicSimplexSpec& spec);

// A non-vertex lattice point of the closed standard simplex, reported as a
// fractional vector. k is the witnessing multiple of the generator in the
// cyclic scan and 0 when the witness came from a general coset walk.
struct EmptinessWitness {
  std::int64_t k = 0;
  std::vector<Rational> point;
};

struct EmptinessResult {
  bool empty = true;
  std::optional<EmptinessWitness> witness;
};

// Empty iff every nonzero coset representative has coordinate sum > 1. On
// failure reports the smallest witnessing k.
EmptinessResult is_empty(const CyclicSimplexSpec& spec);

// Same criterion over an arbitrary finite-index lattice (any dimension);
// the witness is the first failing coset in canonical enumeration order.
EmptinessResult is_empty_general(const SuperLattice& lattice);

// Result of rebasing a simplex to the standard form: the pivot vertex moves
// to the origin and the edge vectors become the unit basis; `lattice` is the
// ambient Z^4 rewritten in edge coordinates. `spec` is present exactly when
// the quotient group is cyclic.
struct StandardForm {
  SuperLattice lattice;
  GroupStructure group;
  std::optional<CyclicSimplexSpec> spec;
};

StandardForm to_standard_form(const GeneralSimplex& s, int pivot = 0);

// The 5-dimensional lattice Z^5 + Z*(1/p)(1,-1,0,0,a) + Z*(1/p)(0,0,1,-1,b).
// Its quotient group is (p,p), yet the standard simplex stays empty: the
// cyclicity theorem for dimension 4 does not extend to dimension 5.
SuperLattice dim5_counterexample(std::int64_t p, std::int64_t a, std::int64_t b);

bool is_prime(std::int64_t n);

}  // namespace simplexlab
