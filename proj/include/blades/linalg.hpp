#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "blades/rational.hpp"

namespace blades {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(Matrix m);

/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

}  // namespace blades
