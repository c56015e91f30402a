#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplexlab/simplex.hpp"
#include "simplexlab/width.hpp"

namespace simplexlab {

// A stable quintuple: five integers summing to zero together with its known
// orthogonal relations with coefficients in {0,1,2}.
struct Quintuple {
  int id = 0;  // 1-based row number in the table
  std::array<std::int64_t, 5> entries{};
  std::vector<std::array<std::int64_t, 5>> relations;
};

// The embedded 29-row table. Validated on first access; a corrupted table
// aborts with an exception rather than serving bad data.
const std::vector<Quintuple>& mmm_table();

// Table file format, one row per line:
//   a1 a2 a3 a4 a5 | r1,r2,r3,r4,r5 ; r1,r2,r3,r4,r5 ; ...
// '#' starts a comment. Rows are numbered in file order starting at 1.
std::vector<Quintuple> parse_quintuple_table(std::string_view text);
std::vector<Quintuple> load_quintuple_table(const std::filesystem::path& path);

struct QuintupleCheck {
  int id = 0;
  bool sum_zero = false;
  std::int64_t relations_checked = 0;
  std::vector<std::string> issues;

  bool ok() const { return sum_zero && issues.empty(); }
};
QuintupleCheck verify_quintuple(const Quintuple& q);

enum class FamilyKind { table, family_i, family_ii };

// One member of a quintuple family: the cyclic spec generated by the point
// (k/n) * (projection of `source`), where `source` is the full zero-sum
// 5-vector (a table row, (x,-x,y,z,-y-z) or (x,-2x,y,-2y,x+y)).
struct FamilyInstance {
  FamilyKind kind = FamilyKind::table;
  int row_id = 0;  // table rows only
  int drop_index = 5;
  std::int64_t k = 1;
  std::int64_t n = 1;
  std::array<std::int64_t, 3> params{};  // (x,y,z) for family i, (x,y,0) for ii
  std::array<std::int64_t, 5> source{};
  std::vector<std::array<std::int64_t, 5>> relations;
  CyclicSimplexSpec spec;
};

// Requires gcd(k, n) == 1 and a projected generator of full order n;
// degenerate projections are rejected, not silently reduced. Emptiness of
// the resulting spec is not guaranteed — callers filter with is_empty.
FamilyInstance instantiate(const Quintuple& q, int drop_index, std::int64_t k, std::int64_t n);

// Parametric families over a common denominator n:
//   family_i : params (x, y, z) -> (x, -x, y, z, -y-z)
//   family_ii: params (x, y)    -> (x, -2x, y, -2y, x+y)
FamilyInstance family_parametric(FamilyKind kind, std::span<const std::int64_t> params,
                                 std::int64_t n, int drop_index);

const std::vector<std::array<std::int64_t, 5>>& parametric_relations(FamilyKind kind);

// Width-at-most-2 certificate from the instance's relations: applies
// functional_from_relation to each and keeps the first one of minimal
// spread. Not claimed optimal.
WidthCertificate certify_instance(const FamilyInstance& inst);

// Exhaustive scan of all lattices Z^4 + (1/p)*P with P a plane of (Z_p)^4.
// Every such quotient is (p,p); none of the simplices may be empty. Each
// non-empty witness is cross-checked: scaled by p it is a nonzero element
// of P with nonnegative coordinates summing to at most p.
struct NoncyclicSearchReport {
  std::int64_t p = 0;
  std::int64_t planes_checked = 0;
  std::int64_t empty_found = 0;
  std::int64_t witness_failures = 0;
  std::int64_t group_failures = 0;

  bool passed() const { return empty_found == 0 && witness_failures == 0 && group_failures == 0; }
  std::string to_json() const;
};
NoncyclicSearchReport search_noncyclic_terminal(std::int64_t p);

}  // namespace simplexlab
