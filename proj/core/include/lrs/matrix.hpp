#pragma once

#include <span>
#include <vector>

#include "lrs/rational.hpp"

namespace lrs {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  /// Throws Error(invalid_argument) on a zero dimension.
  ExactMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
Rational determinant(const ExactMatrix& m);

/// Solves m x = rhs exactly: rows are cleared of denominators, then Bareiss
/// elimination with full pivoting. Throws Error(singular_system) when m is
/// singular.
std::vector<Rational> solve(const ExactMatrix& m, std::span<const Rational> rhs);

}  // namespace lrs
