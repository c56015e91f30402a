#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simplexlab/checked_int.hpp"

namespace simplexlab {

// Dense matrix of exact checked integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix operator*(const IntMatrix& o) const;

  // Exact determinant (Bareiss fraction-free elimination). Square input only.
  Int determinant() const;

  // Transposed cofactor matrix: (*this) * adjugate() == determinant() * I.
  IntMatrix adjugate() const;

  bool is_square() const { return rows_ == cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> e_;
};

bool is_unimodular(const IntMatrix& m);

}  // namespace simplexlab
