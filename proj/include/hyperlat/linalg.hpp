#pragma once

// Small dense exact linear algebra over Rational: row reduction, null
// spaces and square solves. Sizes here never exceed ~20.

#include <cstddef>
#include <vector>

#include "hyperlat/rational.hpp"

namespace hyperlat {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

/// Basis of {v : M v = 0}; each basis vector has a 1 in its free column.
std::vector<std::vector<Rational>> null_space(RationalMatrix m);

/// Solves a square nonsingular system; throws ConsistencyError if singular.
std::vector<Rational> solve(RationalMatrix m, std::vector<Rational> rhs);

}  // namespace hyperlat
