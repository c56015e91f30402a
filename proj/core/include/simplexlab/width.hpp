#pragma once

#include <array>
#include <cstdint>

#include "simplexlab/simplex.hpp"

namespace simplexlab {

// An integer functional from the dual lattice together with its values on
// the five vertices. `width` is max(vertex_values) - min(vertex_values);
// `optimal` certifies that the complete box search proved no nonzero dual
// functional achieves a smaller spread.
struct WidthCertificate {
  std::array<std::int64_t, 4> functional{};
  std::array<std::int64_t, 5> vertex_values{};
  std::int64_t width = 0;
  bool optimal = false;
};

// Exact lattice width of the standard simplex of `spec` over the dual of its
// lattice. Complete search: 0 is always a vertex value, so an optimal
// functional y satisfies |y_i| <= width for all i; scanning boxes of growing
// radius W until the best spread found is <= W is therefore exhaustive.
// Ties are broken by the lexicographically smallest functional whose first
// nonzero coordinate is positive.
WidthCertificate width(const CyclicSimplexSpec& spec);

// Width of an arbitrary nondegenerate integer simplex over the dual of Z^4.
// Same search over edge-value vectors z (the functional is integral iff
// adj(E) z == 0 mod det E); the last coordinate of each box cell is clipped
// to the window that keeps the spread within the current radius.
WidthCertificate width_general(const GeneralSimplex& s);

// Turns a {0,1,2} relation of a zero-sum integer quintuple into a dual
// functional for every simplex obtained by dropping coordinate `drop_index`
// (1-based): the relation is shifted so its dropped entry becomes 0 (kept
// as-is for 0, subtracted from (2,2,2,2,2) for 2, reduced by (1,1,1,1,1)
// for 1), then projected. Vertex values land in {0,1,2} or {-1,0,1}, so the
// spread is at most 2.
struct RelationFunctional {
  std::array<std::int64_t, 4> functional{};
  std::array<std::int64_t, 5> vertex_values{};
  std::int64_t spread = 0;
};

RelationFunctional functional_from_relation(const std::array<std::int64_t, 5>& quintuple,
                                            const std::array<std::int64_t, 5>& relation,
                                            int drop_index);

}  // namespace simplexlab
