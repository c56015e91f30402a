#include "simplexlab/lattice.hpp"

#include <set>
#include <stdexcept>

#include "simplexlab/normal_form.hpp"

namespace simplexlab {

namespace {

IntMatrix canonical_scaled_basis(int dim, std::int64_t denom,
                                 const std::vector<std::vector<std::int64_t>>& gens,
                                 std::int64_t& min_denom) {
  std::size_t d = static_cast<std::size_t>(dim);
  // Rows: the generator numerators reduced mod denom, then denom * I, so the
  // row lattice is exactly denom * D.
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(gens.size() + d);
  for (const auto& g : gens) {
    if (g.size() != d) throw std::invalid_argument("SuperLattice: generator of wrong dimension");
    std::vector<std::int64_t> red(d);
    for (std::size_t j = 0; j < d; ++j) red[j] = floor_mod_i64(g[j], denom);
    rows.push_back(std::move(red));
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::int64_t> e(d, 0);
    e[i] = denom;
    rows.push_back(std::move(e));
  }
  HermiteResult hnf = hermite_normal_form(IntMatrix::from_rows(rows));
  IntMatrix basis(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) basis.at(i, j) = hnf.h.at(i, j);

  // Minimize the denominator: divide out the common content of the basis
  // and denom. Keeps the Hermite shape (uniform scaling preserves it).
  Int g{denom};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j) g = gcd(g, basis.at(i, j));
  std::int64_t gi = g.to_int64();
  if (gi > 1) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j <= i; ++j) basis.at(i, j) = exact_div(basis.at(i, j), g);
    denom /= gi;
  }
  min_denom = denom;
  return basis;
}

std::int64_t class_order(std::span<const std::int64_t> num, std::int64_t m) {
  std::int64_t g = m;
  for (std::int64_t v : num) g = gcd_i64(g, v);
  return m / g;
}

}  // namespace

SuperLattice::SuperLattice(int dim, std::int64_t denom,
                           const std::vector<std::vector<std::int64_t>>& generator_numerators)
    : dim_(dim), denom_(0), basis_(0, 0) {
  if (dim < 1) throw std::invalid_argument("SuperLattice: dimension must be positive");
  if (denom < 1) throw std::invalid_argument("SuperLattice: denominator must be positive");
  basis_ = canonical_scaled_basis(dim, denom, generator_numerators, denom_);
  // Keep the nonzero generator classes, rescaled to the minimal denominator;
  // they define the coset enumeration order.
  std::int64_t scale = denom / denom_;
  for (const auto& g : generator_numerators) {
    std::vector<std::int64_t> red(static_cast<std::size_t>(dim));
    bool zero = true;
    for (std::size_t j = 0; j < red.size(); ++j) {
      red[j] = floor_mod_i64(g[j], denom) / scale % denom_;
      zero = zero && red[j] == 0;
    }
    if (!zero) gens_.push_back(std::move(red));
  }
}

SuperLattice SuperLattice::integers(int dim) { return SuperLattice(dim, 1, {}); }

std::int64_t SuperLattice::index() const {
  Int power{1};
  for (int i = 0; i < dim_; ++i) power *= Int{denom_};
  return exact_div(power, basis_.determinant()).to_int64();
}

GroupStructure SuperLattice::group_structure() const {
  // D/Z^d expressed in basis coordinates: Z^d corresponds to the row lattice
  // of rel = denom * basis^{-1} (integral because denom*Z^d is a sublattice
  // of the row lattice of basis), so the quotient is the cokernel of rel.
  std::size_t d = static_cast<std::size_t>(dim_);
  IntMatrix adj = basis_.adjugate();
  Int det = basis_.determinant();
  IntMatrix rel(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rel.at(i, j) = exact_div(Int{denom_} * adj.at(i, j), det);
  SmithResult snf = smith_normal_form(rel);

  GroupStructure g;
  Int order{1};
  for (std::size_t i = 0; i < d; ++i) {
    Int f = snf.s.at(i, i);
    order *= f;
    if (f > Int{1}) g.invariant_factors.push_back(f.to_int64());
  }
  g.order = order.to_int64();
  if (g.order != index()) throw std::logic_error("group_structure: order does not match index");
  return g;
}

void SuperLattice::for_each_coset(
    const std::function<bool(std::span<const std::int64_t>)>& visit) const {
  std::size_t d = static_cast<std::size_t>(dim_);
  std::size_t k = gens_.size();
  std::vector<std::int64_t> range(k);
  Int tuples{1};
  for (std::size_t i = 0; i < k; ++i) {
    range[i] = class_order(gens_[i], denom_);
    tuples *= Int{range[i]};
  }
  std::int64_t idx = index();
  // When the exponent box has exactly index-many tuples the coset map is a
  // bijection and no deduplication is needed (the common case: one full
  // order generator, or an independent generator set).
  bool dup_free = tuples == Int{idx};

  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> x(k, 0);
  // prefix[i] = sum of x_t * gen_t for t < i, mod denom
  std::vector<std::vector<std::int64_t>> prefix(k + 1, std::vector<std::int64_t>(d, 0));
  std::int64_t visited = 0;
  while (true) {
    const std::vector<std::int64_t>& cur = prefix[k];
    bool fresh = dup_free || seen.insert(cur).second;
    if (fresh) {
      ++visited;
      if (!visit(std::span<const std::int64_t>(cur))) return;
    }
    // odometer, last exponent fastest; refresh the prefix sums from the
    // bumped level down
    std::size_t i = k;
    while (i-- > 0) {
      if (++x[i] < range[i]) break;
      x[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t v = prefix[i][j] + x[i] * gens_[i][j] % denom_;
      prefix[i + 1][j] = v >= denom_ ? v - denom_ : v;
    }
    for (std::size_t lvl = i + 1; lvl < k; ++lvl) prefix[lvl + 1] = prefix[lvl];
  }
  if (visited != idx)
    throw std::logic_error("for_each_coset: enumeration did not cover the quotient");
}

std::vector<std::vector<Rational>> SuperLattice::coset_representatives() const {
  std::vector<std::vector<Rational>> out;
  for_each_coset([&](std::span<const std::int64_t> num) {
    std::vector<Rational> v;
    v.reserve(num.size());
    for (std::int64_t n : num) v.emplace_back(n, denom_);
    out.push_back(std::move(v));
    return true;
  });
  return out;
}

bool SuperLattice::dual_member(std::span<const std::int64_t> y) const {
  std::size_t d = static_cast<std::size_t>(dim_);
  if (y.size() != d) throw std::invalid_argument("dual_member: wrong dimension");
  for (std::size_t i = 0; i < d; ++i) {
    Int dot{0};
    for (std::size_t j = 0; j < d; ++j) dot += basis_.at(i, j) * Int{y[j]};
    if (!(dot % Int{denom_}).is_zero()) return false;
  }
  return true;
}

}  // namespace simplexlab
