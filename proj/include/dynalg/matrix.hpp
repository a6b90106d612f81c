#pragma once

#include <cstddef>
#include <vector>

#include "dynalg/scalar.hpp"

namespace dynalg {

using Vector = std::vector<Scalar>;

/// Dense rectangular matrix over Q(i), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// First `count` columns.
  Matrix left_columns(std::size_t count) const;
  Vector apply(const Vector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row echelon data from fraction-free elimination.
struct EchelonForm {
  std::vector<std::size_t> pivot_columns;  // ascending
  Matrix reduced;                          // rows 0..rank-1 hold the echelon rows
};

/// Bareiss elimination over Z[i] after clearing row denominators; the pivot
/// in each column is the candidate of smallest bit size.
EchelonForm echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per non-pivot column; empty iff full column rank.
std::vector<Vector> nullspace(const Matrix& m);

}  // namespace dynalg
