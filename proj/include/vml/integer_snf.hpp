#pragma once

#include <cstddef>
#include <vector>

#include "vml/gaussian_rational.hpp"

namespace vml {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> a_;
};

/// Nonzero diagonal entries of the Smith normal form over Z, positive and
/// each dividing the next. Pivots are chosen by minimal absolute value.
std::vector<BigInt> smith_diagonal(IntMatrix m);

}  // namespace vml
