#pragma once

#include <cstddef>
#include <vector>

#include "chipfire/integer.hpp"

namespace chipfire {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix transpose() const;
  std::vector<Integer> row(std::size_t r) const;

  /// The submatrix with row `r` and column `c` removed.
  IntegerMatrix minor_matrix(std::size_t r, std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& x);

bool is_symmetric(const IntegerMatrix& m);
bool is_diagonal(const IntegerMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(IntegerMatrix m);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(IntegerMatrix m);

}  // namespace chipfire
