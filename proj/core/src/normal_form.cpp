#include "simplexlab/normal_form.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace simplexlab {

namespace {

// row_i -= q * row_j, applied to the working matrix and its transform.
void row_axpy(IntMatrix& a, IntMatrix& u, std::size_t i, std::size_t j, Int q) {
  if (q.is_zero()) return;
  for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
}

void row_swap(IntMatrix& a, IntMatrix& u, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
  for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
}

void row_negate(IntMatrix& a, IntMatrix& u, std::size_t i) {
  for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
}

void col_axpy(IntMatrix& a, IntMatrix& v, std::size_t i, std::size_t j, Int q) {
  if (q.is_zero()) return;
  for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
  for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
}

void col_swap(IntMatrix& a, IntMatrix& v, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
  for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
}

void col_negate(IntMatrix& a, IntMatrix& v, std::size_t i) {
  for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) = -a.at(r, i);
  for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) = -v.at(r, i);
}

void verify_hermite(const IntMatrix& m, const HermiteResult& res) {
  if (!(res.u * m == res.h)) throw std::logic_error("hermite_normal_form: u*m != h");
  if (!is_unimodular(res.u)) throw std::logic_error("hermite_normal_form: u not unimodular");
  std::size_t c = m.cols();
  for (std::size_t i = 0; i < res.h.rows(); ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const Int& e = res.h.at(i, j);
      if (i >= c) {
        if (!e.is_zero()) throw std::logic_error("hermite_normal_form: nonzero tail row");
      } else if (j > i) {
        if (!e.is_zero()) throw std::logic_error("hermite_normal_form: not lower-triangular");
      } else if (j == i) {
        if (e <= Int{0}) throw std::logic_error("hermite_normal_form: nonpositive pivot");
      } else {
        if (e < Int{0} || e >= res.h.at(j, j))
          throw std::logic_error("hermite_normal_form: entry not reduced");
      }
    }
}

void verify_smith(const IntMatrix& m, const SmithResult& res) {
  if (!(res.u * m * res.v == res.s)) throw std::logic_error("smith_normal_form: u*m*v != s");
  if (!is_unimodular(res.u) || !is_unimodular(res.v))
    throw std::logic_error("smith_normal_form: transform not unimodular");
  std::size_t n = std::min(res.s.rows(), res.s.cols());
  for (std::size_t i = 0; i < res.s.rows(); ++i)
    for (std::size_t j = 0; j < res.s.cols(); ++j)
      if (i != j && !res.s.at(i, j).is_zero())
        throw std::logic_error("smith_normal_form: not diagonal");
  for (std::size_t i = 0; i < n; ++i) {
    if (res.s.at(i, i) < Int{0}) throw std::logic_error("smith_normal_form: negative factor");
    if (i + 1 < n) {
      Int a = res.s.at(i, i);
      Int b = res.s.at(i + 1, i + 1);
      if (a.is_zero() && !b.is_zero())
        throw std::logic_error("smith_normal_form: zero before nonzero");
      if (!a.is_zero() && !(b % a).is_zero())
        throw std::logic_error("smith_normal_form: divisibility chain broken");
    }
  }
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  std::size_t r = m.rows();
  std::size_t c = m.cols();
  if (r < c) throw std::invalid_argument("hermite_normal_form: rank-deficient input");
  IntMatrix h(m);
  IntMatrix u = IntMatrix::identity(r);

  // Settle pivots from the last column backwards so the triangle ends up in
  // the lower-left. Rows with index >= c never become pivots and are fully
  // eliminated, leaving zero rows at the bottom.
  for (std::size_t jj = c; jj-- > 0;) {
    // Pool of unsettled rows: 0..jj and c..r-1.
    auto pool_next = [&](std::size_t i) { return i == jj ? c : i + 1; };
    while (true) {
      std::size_t best = r;
      int nonzeros = 0;
      for (std::size_t i = 0; i <= jj || (i >= c && i < r); i = pool_next(i)) {
        if (h.at(i, jj).is_zero()) continue;
        ++nonzeros;
        if (best == r || h.at(i, jj).abs() < h.at(best, jj).abs()) best = i;
      }
      if (nonzeros == 0) throw std::invalid_argument("hermite_normal_form: rank-deficient input");
      if (nonzeros == 1) {
        if (h.at(best, jj) < Int{0}) row_negate(h, u, best);
        row_swap(h, u, best, jj);
        break;
      }
      for (std::size_t i = 0; i <= jj || (i >= c && i < r); i = pool_next(i)) {
        if (i == best || h.at(i, jj).is_zero()) continue;
        row_axpy(h, u, i, best, floor_div(h.at(i, jj), h.at(best, jj)));
      }
    }
  }
  // Reduce below-diagonal entries into [0, diagonal), rightmost column of
  // each row first so later steps cannot disturb finished ones.
  for (std::size_t i = 1; i < c; ++i)
    for (std::size_t j = i; j-- > 0;)
      row_axpy(h, u, i, j, floor_div(h.at(i, j), h.at(j, j)));

  HermiteResult res{std::move(h), std::move(u)};
  verify_hermite(m, res);
  return res;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  std::size_t r = m.rows();
  std::size_t c = m.cols();
  IntMatrix s(m);
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (s.at(i, j).is_zero()) continue;
          if (pi == r || s.at(i, j).abs() < s.at(pi, pj).abs()) {
            pi = i;
            pj = j;
          }
        }
      if (pi == r) {
        t = n;  // remaining block is zero
        break;
      }
      row_swap(s, u, t, pi);
      col_swap(s, v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s.at(i, t).is_zero()) continue;
        row_axpy(s, u, i, t, floor_div(s.at(i, t), s.at(t, t)));
        if (!s.at(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s.at(t, j).is_zero()) continue;
        col_axpy(s, v, j, t, floor_div(s.at(t, j), s.at(t, t)));
        if (!s.at(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;  // a remainder became the new smallest entry

      // Pivot must divide the whole remaining block; if not, fold the
      // offending row in and re-eliminate with the resulting smaller gcd.
      Int d = s.at(t, t);
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (!(s.at(i, j) % d).is_zero()) {
            row_axpy(s, u, t, i, Int{-1});
            divides = false;
          }
      if (!divides) continue;

      if (s.at(t, t) < Int{0}) row_negate(s, u, t);
      break;
    }
    if (t == n) break;
  }

  SmithResult res{std::move(s), std::move(u), std::move(v)};
  verify_smith(m, res);
  return res;
}

}  // namespace simplexlab
