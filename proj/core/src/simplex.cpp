#include "simplexlab/simplex.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "simplexlab/matrix.hpp"

namespace simplexlab {

namespace {

constexpr std::int64_t kMaxDet = std::int64_t{1} << 31;

IntMatrix edge_matrix(const GeneralSimplex& s, int pivot) {
  if (pivot < 0 || pivot > 4) throw std::invalid_argument("pivot index out of range");
  IntMatrix e(4, 4);
  std::size_t r = 0;
  for (int i = 0; i < 5; ++i) {
    if (i == pivot) continue;
    for (std::size_t j = 0; j < 4; ++j)
      e.at(r, j) = Int{s.vertices[static_cast<std::size_t>(i)][j]} -
                   Int{s.vertices[static_cast<std::size_t>(pivot)][j]};
    ++r;
  }
  return e;
}

// Order of a residue vector in (1/m)Z^d / Z^d.
std::int64_t element_order(std::span<const std::int64_t> num, std::int64_t m) {
  std::int64_t g = m;
  for (std::int64_t v : num) g = gcd_i64(g, v);
  return m / g;
}

// Combines h (order a) and r (order b) into an element of order lcm(a, b):
// split lcm = u*v with coprime u | a, v | b, then (a/u)h + (b/v)r works
// because commuting elements of coprime orders add up to their product.
std::array<std::int64_t, 4> combine_to_lcm(std::array<std::int64_t, 4> h,
                                           std::span<const std::int64_t> r, std::int64_t m) {
  std::int64_t a = element_order(h, m);
  std::int64_t b = element_order(r, m);
  std::int64_t l = a / gcd_i64(a, b) * b;
  if (l == a) return h;
  std::int64_t u = 1, v = 1;
  std::int64_t rest = l;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::int64_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    (a % q == 0 ? u : v) *= q;
  }
  if (rest > 1) (a % rest == 0 ? u : v) *= rest;
  std::array<std::int64_t, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = floor_mod_i64((a / u) * h[i] + (b / v) * r[i], m);
  if (element_order(out, m) != l) throw std::logic_error("combine_to_lcm: order mismatch");
  return out;
}

}  // namespace

GeneralSimplex parse_simplex_text(std::string_view text) {
  GeneralSimplex s;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::int64_t> vals;
    std::int64_t v;
    while (ls >> v) vals.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("simplex text: non-integer token");
    if (vals.empty()) continue;
    if (vals.size() != 4) throw std::invalid_argument("simplex text: expected 4 integers per line");
    if (row >= 5) throw std::invalid_argument("simplex text: more than 5 vertex lines");
    for (std::size_t j = 0; j < 4; ++j) s.vertices[row][j] = vals[j];
    ++row;
  }
  if (row != 5) throw std::invalid_argument("simplex text: expected 5 vertex lines");
  return s;
}

GeneralSimplex load_simplex_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_simplex_text(buf.str());
}

std::string format_simplex_text(const GeneralSimplex& s) {
  std::ostringstream out;
  for (const auto& v : s.vertices)
    out << v[0] << ' ' << v[1] << ' ' << v[2] << ' ' << v[3] << '\n';
  return out.str();
}

CyclicSimplexSpec::CyclicSimplexSpec(std::int64_t det, std::array<std::int64_t, 4> gen) : n_(det) {
  if (det < 1) throw std::invalid_argument("spec: determinant must be positive");
  if (det > kMaxDet) throw OverflowError("spec: determinant exceeds the supported range");
  std::int64_t g = det;
  for (std::size_t i = 0; i < 4; ++i) {
    a_[i] = floor_mod_i64(gen[i], det);
    g = gcd_i64(g, a_[i]);
  }
  if (g != 1)
    throw std::invalid_argument("spec: generator does not have full order (gcd " +
                                std::to_string(g) + " with " + std::to_string(det) + ")");
}

SuperLattice CyclicSimplexSpec::lattice() const {
  return SuperLattice(4, n_, {{a_[0], a_[1], a_[2], a_[3]}});
}

CanonicalForm canonicalize_tuple(std::int64_t n, std::array<std::int64_t, 5> tuple) {
  if (n < 1) throw std::invalid_argument("canonicalize_tuple: n must be positive");
  CanonicalForm out;
  out.n = n;
  if (n == 1) return out;
  for (auto& v : tuple) v = floor_mod_i64(v, n);
  bool have = false;
  std::array<std::int64_t, 5> best{};
  for (std::int64_t u = 1; u < n; ++u) {
    if (gcd_i64(u, n) != 1) continue;
    std::array<std::int64_t, 5> cand;
    for (std::size_t i = 0; i < 5; ++i) cand[i] = (u * tuple[i]) % n;
    std::sort(cand.begin(), cand.end());
    if (!have || cand < best) {
      best = cand;
      have = true;
    }
  }
  out.tuple = best;
  return out;
}

CanonicalForm canonical_form(const CyclicSimplexSpec& spec) {
  const auto& a = spec.gen();
  std::int64_t n = spec.det();
  std::int64_t a5 = floor_mod_i64(-(a[0] + a[1] + a[2] + a[3]), n);
  return canonicalize_tuple(n, {a[0], a[1], a[2], a[3], a5});
}

std::string CanonicalForm::str() const {
  std::string out = "(" + std::to_string(n) + ", (";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) out += ',';
    out += std::to_string(tuple[i]);
  }
  out += "))";
  return out;
}

EmptinessResult is_empty(const CyclicSimplexSpec& spec) {
  std::int64_t n = spec.det();
  const auto& a = spec.gen();
  // Residues of k*a advance by a at each step; the coordinate sum of the
  // fractional point is sum(r)/n, so the simplex contains a non-vertex
  // lattice point exactly when sum(r) <= n for some k in 1..n-1.
  std::array<std::int64_t, 4> r = {0, 0, 0, 0};
  for (std::int64_t k = 1; k < n; ++k) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      r[i] += a[i];
      if (r[i] >= n) r[i] -= n;
      sum += r[i];
    }
    if (sum <= n) {
      EmptinessWitness w;
      w.k = k;
      for (std::size_t i = 0; i < 4; ++i) w.point.emplace_back(r[i], n);
      return {false, std::move(w)};
    }
  }
  return {true, std::nullopt};
}

EmptinessResult is_empty_general(const SuperLattice& lattice) {
  std::int64_t m = lattice.denominator();
  EmptinessResult res{true, std::nullopt};
  lattice.for_each_coset([&](std::span<const std::int64_t> num) {
    std::int64_t sum = 0;
    bool zero = true;
    for (std::int64_t v : num) {
      sum += v;
      zero = zero && v == 0;
    }
    if (zero || sum > m) return true;
    EmptinessWitness w;
    w.k = 0;
    for (std::int64_t v : num) w.point.emplace_back(v, m);
    res = {false, std::move(w)};
    return false;
  });
  return res;
}

StandardForm to_standard_form(const GeneralSimplex& s, int pivot) {
  IntMatrix e = edge_matrix(s, pivot);
  Int det = e.determinant();
  if (det.is_zero()) throw std::invalid_argument("to_standard_form: degenerate simplex");
  Int n = det.abs();
  std::int64_t n64 = n.to_int64();

  // Rows of e^{-1} over the denominator |det|: the images of the old unit
  // vectors, i.e. generators of the ambient lattice in edge coordinates.
  IntMatrix adj = e.adjugate();
  int sgn = det.sign();
  std::vector<std::vector<std::int64_t>> gens(4, std::vector<std::int64_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Int v = sgn < 0 ? -adj.at(i, j) : adj.at(i, j);
      gens[i][j] = floor_mod(v, n).to_int64();
    }

  SuperLattice lattice(4, n64, gens);
  GroupStructure group = lattice.group_structure();
  StandardForm out{lattice, group, std::nullopt};
  if (!group.cyclic()) return out;

  if (group.order != n64) throw std::logic_error("to_standard_form: order/determinant mismatch");
  // Prefer a generator that is itself a row of e^{-1} (deterministic and
  // matches the direct inversion); otherwise combine the rows into an
  // element of full order.
  for (std::size_t i = 0; i < 4 && !out.spec; ++i)
    if (element_order(gens[i], n64) == n64)
      out.spec = CyclicSimplexSpec(n64, {gens[i][0], gens[i][1], gens[i][2], gens[i][3]});
  if (!out.spec) {
    std::array<std::int64_t, 4> h{};
    for (const auto& row : gens) h = combine_to_lcm(h, row, n64);
    if (element_order(h, n64) != n64)
      throw std::logic_error("to_standard_form: cyclic group without a generator");
    out.spec = CyclicSimplexSpec(n64, h);
  }
  return out;
}

SuperLattice dim5_counterexample(std::int64_t p, std::int64_t a, std::int64_t b) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("dim5_counterexample: p must be an odd prime");
  if (floor_mod_i64(a, p) == 0) throw std::invalid_argument("dim5_counterexample: p divides a");
  if (floor_mod_i64(b, p) == 0) throw std::invalid_argument("dim5_counterexample: p divides b");
  std::vector<std::vector<std::int64_t>> gens = {
      {1, p - 1, 0, 0, floor_mod_i64(a, p)},
      {0, 0, 1, p - 1, floor_mod_i64(b, p)},
  };
  return SuperLattice(5, p, gens);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace simplexlab
