#pragma once

#include <cstddef>
#include <vector>

#include "kgraph/scalar.hpp"

namespace kgraph {

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Rows given as nested lists; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix adjoint() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank by exact Gaussian elimination.
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(Matrix m);
bool is_unitary(const Matrix& m);

}  // namespace kgraph
