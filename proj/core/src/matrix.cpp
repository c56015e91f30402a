#include "simplexlab/matrix.hpp"

#include <stdexcept>

namespace simplexlab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Int{1};
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  std::size_t cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Int{rows[i][j]};
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant: matrix not square");
  std::size_t n = rows_;
  if (n == 0) return Int{1};
  IntMatrix w(*this);
  int sign = 1;
  Int prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && w.at(r, k).is_zero()) ++r;
      if (r == n) return Int{0};
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = exact_div(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
    prev = w.at(k, k);
  }
  Int d = w.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

IntMatrix IntMatrix::adjugate() const {
  if (!is_square()) throw std::invalid_argument("adjugate: matrix not square");
  std::size_t n = rows_;
  if (n == 0) return IntMatrix(0, 0);
  if (n == 1) {
    IntMatrix r(1, 1);
    r.at(0, 0) = Int{1};
    return r;
  }
  IntMatrix adj(n, n);
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = minor.determinant();
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

bool is_unimodular(const IntMatrix& m) {
  return m.is_square() && m.determinant().abs() == Int{1};
}

}  // namespace simplexlab
