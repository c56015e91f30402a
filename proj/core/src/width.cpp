#include "simplexlab/width.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "simplexlab/matrix.hpp"

namespace simplexlab {

namespace {

using Vec4 = std::array<std::int64_t, 4>;

std::int64_t spread_with_zero(const Vec4& z) {
  std::int64_t mx = 0, mn = 0;
  for (std::int64_t v : z) {
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  return mx - mn;
}

// Scans the box max|z_i| <= w, clipping z_3 to the window that keeps the
// spread within w. Feasible(z, y) decides dual membership and produces the
// ambient functional. Returns the least spread seen (at most w candidates
// matter); when `collect` is set, every feasible candidate with spread equal
// to `target` is reported through it.
template <class Feasible, class Collect>
std::int64_t scan_box(std::int64_t w, Feasible&& feasible, std::int64_t target, Collect&& collect) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  Vec4 z{};
  Vec4 y{};
  for (z[0] = -w; z[0] <= w; ++z[0])
    for (z[1] = -w; z[1] <= w; ++z[1])
      for (z[2] = -w; z[2] <= w; ++z[2]) {
        std::int64_t pmax = std::max({std::int64_t{0}, z[0], z[1], z[2]});
        std::int64_t pmin = std::min({std::int64_t{0}, z[0], z[1], z[2]});
        std::int64_t lo = std::max(-w, pmax - w);
        std::int64_t hi = std::min(w, pmin + w);
        for (z[3] = lo; z[3] <= hi; ++z[3]) {
          if (z[0] == 0 && z[1] == 0 && z[2] == 0 && z[3] == 0) continue;
          if (!feasible(z, y)) continue;
          std::int64_t s = spread_with_zero(z);
          best = std::min(best, s);
          if (target >= 0 && s == target) collect(z, y);
        }
      }
  return best;
}

struct SearchResult {
  Vec4 z;
  Vec4 y;
  std::int64_t width;
};

// Complete search. Any nonzero dual functional has 0 among its vertex
// values, so its spread bounds every |z_i|; growing the box radius until the
// best spread found fits inside it is therefore exhaustive. The final pass
// re-enumerates the optimum box and applies the tie-break: lexicographically
// least functional with positive first nonzero coordinate.
template <class Feasible>
SearchResult optimal_dual(Feasible&& feasible, std::int64_t cap) {
  for (std::int64_t w = 1;; ++w) {
    if (w > cap) throw std::logic_error("width search exceeded its termination bound");
    std::int64_t best = scan_box(w, feasible, -1, [](const Vec4&, const Vec4&) {});
    if (best > w) continue;

    std::optional<SearchResult> chosen;
    scan_box(best, feasible, best, [&](Vec4 z, Vec4 y) {
      for (std::size_t i = 0; i < 4; ++i) {
        if (y[i] == 0) continue;
        if (y[i] < 0) {
          for (auto& v : y) v = -v;
          for (auto& v : z) v = -v;
        }
        break;
      }
      if (!chosen || y < chosen->y) chosen = SearchResult{z, y, best};
    });
    if (!chosen) throw std::logic_error("width search lost its optimum");
    return *chosen;
  }
}

}  // namespace

WidthCertificate width(const CyclicSimplexSpec& spec) {
  std::int64_t n = spec.det();
  const auto& a = spec.gen();
  auto feasible = [&](const Vec4& z, Vec4& y) {
    __int128 dot = 0;
    for (std::size_t i = 0; i < 4; ++i) dot += static_cast<__int128>(z[i]) * a[i];
    if (dot % n != 0) return false;
    y = z;
    return true;
  };
  // (n,0,0,0) is always dual, so the search stops by radius n.
  SearchResult r = optimal_dual(feasible, std::max<std::int64_t>(n, 1));

  WidthCertificate cert;
  cert.functional = r.y;
  cert.vertex_values = {0, r.z[0], r.z[1], r.z[2], r.z[3]};
  cert.width = r.width;
  cert.optimal = true;
  if (!spec.lattice().dual_member(cert.functional) || spread_with_zero(r.z) != cert.width)
    throw std::logic_error("width: certificate failed revalidation");
  return cert;
}

WidthCertificate width_general(const GeneralSimplex& s) {
  IntMatrix e(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      e.at(i, j) = Int{s.vertices[i + 1][j]} - Int{s.vertices[0][j]};
  Int det = e.determinant();
  if (det.is_zero()) throw std::invalid_argument("width_general: degenerate simplex");
  IntMatrix adj = e.adjugate();

  // z holds the values y*edge_i; y = adj * z / det must be integral.
  auto feasible = [&](const Vec4& z, Vec4& y) {
    for (std::size_t i = 0; i < 4; ++i) {
      Int v{0};
      for (std::size_t j = 0; j < 4; ++j) v += adj.at(i, j) * Int{z[j]};
      if (!(v % det).is_zero()) return false;
      y[i] = exact_div(v, det).to_int64();
    }
    return true;
  };
  SearchResult r = optimal_dual(feasible, det.abs().to_int64());

  WidthCertificate cert;
  cert.functional = r.y;
  for (std::size_t v = 0; v < 5; ++v) {
    Int val{0};
    for (std::size_t j = 0; j < 4; ++j) val += Int{r.y[j]} * Int{s.vertices[v][j]};
    cert.vertex_values[v] = val.to_int64();
  }
  cert.width = r.width;
  cert.optimal = true;
  std::int64_t mx = cert.vertex_values[0], mn = cert.vertex_values[0];
  for (std::int64_t v : cert.vertex_values) {
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  if (mx - mn != cert.width) throw std::logic_error("width_general: spread mismatch");
  return cert;
}

RelationFunctional functional_from_relation(const std::array<std::int64_t, 5>& quintuple,
                                            const std::array<std::int64_t, 5>& relation,
                                            int drop_index) {
  if (drop_index < 1 || drop_index > 5)
    throw std::invalid_argument("functional_from_relation: drop index must be in 1..5");
  Int sum{0};
  Int dot{0};
  for (std::size_t i = 0; i < 5; ++i) {
    if (relation[i] < 0 || relation[i] > 2)
      throw std::invalid_argument("functional_from_relation: coefficients must lie in {0,1,2}");
    sum += Int{quintuple[i]};
    dot += Int{quintuple[i]} * Int{relation[i]};
  }
  if (!sum.is_zero())
    throw std::invalid_argument("functional_from_relation: quintuple must sum to zero");
  if (!dot.is_zero())
    throw std::invalid_argument("functional_from_relation: relation not orthogonal");

  std::size_t d = static_cast<std::size_t>(drop_index - 1);
  std::array<std::int64_t, 5> shifted = relation;
  switch (relation[d]) {
    case 0:
      break;
    case 2:
      for (auto& v : shifted) v = 2 - v;
      break;
    case 1:
      for (auto& v : shifted) v = v - 1;
      break;
  }
  bool all_zero = true;
  for (std::int64_t v : shifted) all_zero = all_zero && v == 0;
  if (all_zero)
    throw std::invalid_argument("functional_from_relation: relation collapses to zero");

  RelationFunctional out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == d) continue;
    out.functional[j++] = shifted[i];
  }
  out.vertex_values = {0, out.functional[0], out.functional[1], out.functional[2],
                       out.functional[3]};
  std::int64_t mx = 0, mn = 0;
  Int check{0};
  for (std::size_t i = 0; i < 5; ++i) {
    mx = std::max(mx, shifted[i]);
    mn = std::min(mn, shifted[i]);
    check += Int{shifted[i]} * Int{quintuple[i]};
  }
  out.spread = mx - mn;
  if (!check.is_zero())
    throw std::logic_error("functional_from_relation: shifted relation lost orthogonality");
  return out;
}

}  // namespace simplexlab
