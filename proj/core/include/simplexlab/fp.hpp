#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace simplexlab::fp {

// Sum of the canonical representatives in {0,..,p-1} of the entries.
std::int64_t digit_sum(std::int64_t p, std::span<const std::int64_t> v);

// Linear subspace of (Z_p)^ambient, basis in reduced row echelon form.
struct Subspace {
  std::int64_t p = 2;
  int ambient = 0;
  std::vector<std::vector<std::int64_t>> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(std::span<const std::int64_t> v) const;
};

Subspace subspace_from_vectors(std::int64_t p, int ambient,
                               std::vector<std::vector<std::int64_t>> vectors);

struct SubspaceMin {
  std::int64_t m = 0;
  std::vector<std::int64_t> witness;
};

// Minimum digit sum over the nonzero elements, by full enumeration of the
// p^dim - 1 coefficient combinations. Witness is the first attaining vector
// in that enumeration order.
SubspaceMin m_of_subspace(const Subspace& s);

// One normalized direction vector per line (first nonzero entry 1);
// (p^n - 1)/(p - 1) vectors in a deterministic order.
std::vector<std::vector<std::int64_t>> lines(std::int64_t p, int ambient);

// All dim-dimensional subspaces, one reduced-row-echelon basis each. The
// count is the Gaussian binomial [ambient choose dim]_p.
std::vector<Subspace> subspaces(std::int64_t p, int ambient, int dim);

std::int64_t gaussian_binomial(std::int64_t p, int n, int k);

struct LemmaReport {
  int lemma = 0;
  std::int64_t p = 0;
  std::int64_t subspaces_checked = 0;
  std::int64_t failures = 0;
  std::vector<std::string> failure_samples;  // capped
  std::map<std::string, std::int64_t> case_counts;
  std::int64_t max_m = 0;
  std::vector<std::vector<std::int64_t>> max_witness;  // basis of a subspace attaining max_m
  std::map<std::string, std::int64_t> notes;

  bool passed() const { return failures == 0; }
  std::string to_json() const;
};

// Lines of (Z_p)^3: m(L) == p+1 when abc != 0 and (a+b)(a+c)(b+c) == 0,
// otherwise m(L) <= p. Checked exhaustively against brute-force minima.
LemmaReport verify_lemma1(std::int64_t p);

// Lines of (Z_p)^2, p odd: m == p when a+b == 0; m == (p+1)/2 when
// (a+2b)(b+2a) == 0; otherwise m <= (p-1)/2. Cases apply in this order;
// the report counts lines where the first two predicates would both fire
// (none exist, the count is a guard).
LemmaReport verify_lemma2(std::int64_t p);

// Planes of (Z_p)^4: m(P) <= p, exhaustively.
LemmaReport verify_lemma3(std::int64_t p);

}  // namespace simplexlab::fp
