#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "simplexlab/matrix.hpp"
#include "simplexlab/rational.hpp"

namespace simplexlab {

// Invariant factors of a finite abelian quotient, trivial factors dropped:
// each entry >= 2 and divides the next. Empty list means the trivial group.
struct GroupStructure {
  std::vector<std::int64_t> invariant_factors;
  std::int64_t order = 1;

  bool cyclic() const { return invariant_factors.size() <= 1; }
  bool operator==(const GroupStructure&) const = default;
};

// A lattice D with Z^d contained in D contained in (1/M) Z^d, stored in a
// canonical form: the minimal denominator M together with the Hermite basis
// of the integer lattice M*D. Two SuperLattices compare equal exactly when
// they describe the same lattice. Immutable after construction.
class SuperLattice {
 public:
  // Generators are numerator vectors over `denom`; the base lattice Z^d is
  // always included implicitly.
  SuperLattice(int dim, std::int64_t denom,
               const std::vector<std::vector<std::int64_t>>& generator_numerators);

  static SuperLattice integers(int dim);

  int dim() const { return dim_; }
  // Minimal M with D contained in (1/M) Z^d (the exponent of D/Z^d).
  std::int64_t denominator() const { return denom_; }
  // Hermite basis of denominator()*D, one basis vector per row.
  const IntMatrix& scaled_basis() const { return basis_; }

  // Index [D : Z^d] = denominator()^dim / det(scaled_basis()).
  std::int64_t index() const;

  GroupStructure group_structure() const;

  // Nonzero generator classes in construction order, numerators over
  // denominator(); they drive the coset enumeration order.
  const std::vector<std::vector<std::int64_t>>& enumeration_generators() const { return gens_; }

  // Visits one representative per coset of D/Z^d as a numerator vector over
  // denominator(), every coordinate in [0, denominator()). Order is
  // lexicographic in the generator-exponent tuple (construction order, each
  // exponent below the generator's class order, duplicates skipped); the
  // identity coset (all zeros) comes first. Return false from the callback
  // to stop early.
  void for_each_coset(const std::function<bool(std::span<const std::int64_t>)>& visit) const;

  std::vector<std::vector<Rational>> coset_representatives() const;

  // True iff y pairs integrally with every element of D, i.e. y lies in the
  // dual lattice D*. Since D contains Z^d, D* is a sublattice of Z^d.
  bool dual_member(std::span<const std::int64_t> y) const;

  // Equality of lattices, i.e. of the canonical form; the generator
  // presentation is deliberately ignored.
  bool operator==(const SuperLattice& o) const {
    return dim_ == o.dim_ && denom_ == o.denom_ && basis_ == o.basis_;
  }

 private:
  int dim_;
  std::int64_t denom_;
  IntMatrix basis_;
  std::vector<std::vector<std::int64_t>> gens_;
};

}  // namespace simplexlab
