#include "simplexlab/fp.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "simplexlab/simplex.hpp"

namespace simplexlab::fp {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("fp: " + std::to_string(p) + " is not prime");
}

std::string vec_str(std::span<const std::int64_t> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

}  // namespace

std::int64_t digit_sum(std::int64_t p, std::span<const std::int64_t> v) {
  require_prime(p);
  std::int64_t s = 0;
  for (std::int64_t x : v) {
    if (x < 0 || x >= p) throw std::invalid_argument("digit_sum: entry not reduced mod p");
    s += x;
  }
  return s;
}

bool Subspace::contains(std::span<const std::int64_t> v) const {
  if (static_cast<int>(v.size()) != ambient) return false;
  std::vector<std::int64_t> rem(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) rem[j] = floor_mod_i64(v[j], p);
  for (const auto& row : basis) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) continue;
    std::int64_t c = rem[pivot];  // pivot entry of an RREF row is 1
    if (c != 0)
      for (std::size_t j = 0; j < rem.size(); ++j)
        rem[j] = floor_mod_i64(rem[j] - c * row[j], p);
  }
  return std::all_of(rem.begin(), rem.end(), [](std::int64_t x) { return x == 0; });
}

Subspace subspace_from_vectors(std::int64_t p, int ambient,
                               std::vector<std::vector<std::int64_t>> vectors) {
  require_prime(p);
  std::size_t n = static_cast<std::size_t>(ambient);
  for (auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("subspace_from_vectors: wrong dimension");
    for (auto& x : v) x = floor_mod_i64(x, p);
  }
  // Gaussian elimination to reduced row echelon form over Z_p.
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t src = vectors.size();
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (vectors[i][col] != 0) {
        src = i;
        break;
      }
    if (src == vectors.size()) continue;
    auto row = vectors[src];
    // scale pivot to 1
    std::int64_t inv = 1;
    for (std::int64_t t = 1; t < p; ++t)
      if ((row[col] * t) % p == 1) {
        inv = t;
        break;
      }
    for (auto& x : row) x = (x * inv) % p;
    for (auto& v : vectors) {
      std::int64_t c = v[col];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = floor_mod_i64(v[j] - c * row[j], p);
    }
    for (auto& prev : rows) {
      std::int64_t c = prev[col];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) prev[j] = floor_mod_i64(prev[j] - c * row[j], p);
    }
    rows.push_back(std::move(row));
  }
  return Subspace{p, ambient, std::move(rows)};
}

SubspaceMin m_of_subspace(const Subspace& s) {
  require_prime(s.p);
  if (s.basis.empty()) throw std::invalid_argument("m_of_subspace: zero subspace");
  std::size_t k = s.basis.size();
  std::size_t n = static_cast<std::size_t>(s.ambient);
  std::vector<std::int64_t> coeff(k, 0), vec(n);
  SubspaceMin best;
  best.m = -1;
  while (true) {
    // next coefficient tuple (lexicographic, last fastest)
    bool done = true;
    for (std::size_t i = k; i-- > 0;) {
      if (++coeff[i] < s.p) {
        done = false;
        break;
      }
      coeff[i] = 0;
    }
    if (done) break;
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += coeff[i] * s.basis[i][j];
      acc %= s.p;
      vec[j] = acc;
      sum += acc;
    }
    if (best.m < 0 || sum < best.m) {
      best.m = sum;
      best.witness = vec;
    }
  }
  return best;
}

std::vector<std::vector<std::int64_t>> lines(std::int64_t p, int ambient) {
  std::vector<std::vector<std::int64_t>> out;
  for (const Subspace& s : subspaces(p, ambient, 1)) out.push_back(s.basis.front());
  return out;
}

std::vector<Subspace> subspaces(std::int64_t p, int ambient, int dim) {
  require_prime(p);
  if (dim < 1 || dim > ambient) throw std::invalid_argument("subspaces: bad dimension");
  std::size_t n = static_cast<std::size_t>(ambient);
  std::size_t k = static_cast<std::size_t>(dim);
  std::vector<Subspace> out;

  // Pivot column combinations in lexicographic order; for each, enumerate
  // the free entries. Every subspace has exactly one RREF basis, so this
  // visits each one exactly once.
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;  // (row, col)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_pos.emplace_back(i, j);

    std::vector<std::int64_t> assign(free_pos.size(), 0);
    while (true) {
      Subspace s{p, ambient, std::vector<std::vector<std::int64_t>>(
                                 k, std::vector<std::int64_t>(n, 0))};
      for (std::size_t i = 0; i < k; ++i) s.basis[i][piv[i]] = 1;
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        s.basis[free_pos[t].first][free_pos[t].second] = assign[t];
      out.push_back(std::move(s));

      bool done = true;
      for (std::size_t t = assign.size(); t-- > 0;) {
        if (++assign[t] < p) {
          done = false;
          break;
        }
        assign[t] = 0;
      }
      if (done) break;
    }

    // next pivot combination
    std::size_t i = k;
    while (i-- > 0) {
      if (piv[i] + (k - i) < n) {
        ++piv[i];
        for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

std::int64_t gaussian_binomial(std::int64_t p, int n, int k) {
  if (k < 0 || k > n) return 0;
  // prod_{i=0}^{k-1} (p^{n-i} - 1) / (p^{k-i} - 1), evaluated exactly.
  Int num{1}, den{1};
  auto pow = [&](int e) {
    Int r{1};
    for (int i = 0; i < e; ++i) r *= Int{p};
    return r;
  };
  for (int i = 0; i < k; ++i) {
    num *= pow(n - i) - Int{1};
    den *= pow(k - i) - Int{1};
  }
  return exact_div(num, den).to_int64();
}

namespace {

void record_failure(LemmaReport& r, const std::string& detail) {
  ++r.failures;
  if (r.failure_samples.size() < 10) r.failure_samples.push_back(detail);
}

}  // namespace

LemmaReport verify_lemma1(std::int64_t p) {
  require_prime(p);
  LemmaReport r;
  r.lemma = 1;
  r.p = p;
  for (const auto& v : lines(p, 3)) {
    Subspace line{p, 3, {v}};
    std::int64_t m = m_of_subspace(line).m;
    ++r.subspaces_checked;
    if (m > r.max_m) {
      r.max_m = m;
      r.max_witness = {v};
    }
    std::int64_t a = v[0], b = v[1], c = v[2];
    bool abc = a != 0 && b != 0 && c != 0;
    bool pair_zero = ((a + b) % p) == 0 || ((a + c) % p) == 0 || ((b + c) % p) == 0;
    if (abc && pair_zero) {
      ++r.case_counts["m_eq_p_plus_1"];
      if (m != p + 1)
        record_failure(r, "line " + vec_str(v) + ": expected m=" + std::to_string(p + 1) +
                              ", got " + std::to_string(m));
    } else {
      ++r.case_counts["m_le_p"];
      if (m > p)
        record_failure(r, "line " + vec_str(v) + ": expected m<=" + std::to_string(p) + ", got " +
                              std::to_string(m));
    }
  }
  return r;
}

LemmaReport verify_lemma2(std::int64_t p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("verify_lemma2: p must be odd");
  LemmaReport r;
  r.lemma = 2;
  r.p = p;
  r.notes["predicate_conflicts"] = 0;
  for (const auto& v : lines(p, 2)) {
    Subspace line{p, 2, {v}};
    std::int64_t m = m_of_subspace(line).m;
    ++r.subspaces_checked;
    if (m > r.max_m) {
      r.max_m = m;
      r.max_witness = {v};
    }
    std::int64_t a = v[0], b = v[1];
    bool first = ((a + b) % p) == 0;
    bool second = ((a + 2 * b) % p) == 0 || ((b + 2 * a) % p) == 0;
    if (first && second) ++r.notes["predicate_conflicts"];
    if (first) {
      ++r.case_counts["m_eq_p"];
      if (m != p)
        record_failure(r, "line " + vec_str(v) + ": expected m=" + std::to_string(p) + ", got " +
                              std::to_string(m));
    } else if (second) {
      ++r.case_counts["m_eq_half_p_plus_1"];
      if (m != (p + 1) / 2)
        record_failure(r, "line " + vec_str(v) + ": expected m=" + std::to_string((p + 1) / 2) +
                              ", got " + std::to_string(m));
    } else {
      ++r.case_counts["m_le_half_p_minus_1"];
      if (m > (p - 1) / 2)
        record_failure(r, "line " + vec_str(v) + ": expected m<=" + std::to_string((p - 1) / 2) +
                              ", got " + std::to_string(m));
    }
  }
  return r;
}

LemmaReport verify_lemma3(std::int64_t p) {
  require_prime(p);
  LemmaReport r;
  r.lemma = 3;
  r.p = p;
  for (const Subspace& plane : subspaces(p, 4, 2)) {
    std::int64_t m = m_of_subspace(plane).m;
    ++r.subspaces_checked;
    ++r.case_counts["m_le_p"];
    if (m > r.max_m) {
      r.max_m = m;
      r.max_witness = plane.basis;
    }
    if (m > p)
      record_failure(r, "plane " + vec_str(plane.basis[0]) + "," + vec_str(plane.basis[1]) +
                            ": m=" + std::to_string(m) + " exceeds " + std::to_string(p));
  }
  // Tally of x^2 - x - 1 roots mod p, for inspection of the tight subcase.
  std::int64_t roots = 0;
  for (std::int64_t x = 0; x < p; ++x)
    if ((x * x - x - 1) % p == 0) ++roots;
  r.notes["x2_minus_x_minus_1_roots"] = roots;
  return r;
}

std::string LemmaReport::to_json() const {
  nlohmann::json j;
  j["lemma"] = lemma;
  j["p"] = p;
  j["subspaces_checked"] = subspaces_checked;
  j["failures"] = failures;
  j["failure_samples"] = failure_samples;
  j["case_counts"] = case_counts;
  j["max_m"] = max_m;
  j["max_witness"] = max_witness;
  j["notes"] = notes;
  return j.dump();
}

}  // namespace simplexlab::fp
