#pragma once

#include <cstddef>
#include <vector>

#include "vml/polynomial.hpp"

namespace vml {

/// Dense n x n matrix over Q(i), row-major.
class ConstMatrix {
 public:
  explicit ConstMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
  static ConstMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  std::size_t rank() const;
  /// Basis of {w : A w = 0}.
  std::vector<std::vector<GaussianRational>> kernel() const;
  /// Throws if singular.
  ConstMatrix inverse() const;

  friend bool operator==(const ConstMatrix&, const ConstMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<GaussianRational> a_;
};

/// n x n matrix of polynomials. The column span over Q(i)[z] is the lattice
/// of sections of a rank-n bundle inside the trivial bundle on the affine
/// chart.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
  static PolyMatrix identity(std::size_t n);
  static PolyMatrix diagonal(const std::vector<Polynomial>& entries);
  static PolyMatrix from_constant(const ConstMatrix& m);

  std::size_t size() const noexcept { return n_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  ConstMatrix evaluate(const GaussianRational& z) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Polynomial determinant() const;

  /// Column Hermite normal form: the unique lower-triangular generator of
  /// the same column lattice with monic diagonal and, in each row, entries
  /// left of the diagonal of lower degree than the diagonal. Requires full
  /// rank.
  PolyMatrix column_hermite_form() const;

  /// Smith invariant factors d_1 | d_2 | ... | d_n (monic; zero for rank
  /// deficiency), by Euclidean row and column operations.
  std::vector<Polynomial> invariant_factors() const;

  int max_degree() const noexcept;

 private:
  void swap_columns(std::size_t i, std::size_t j);
  void swap_rows(std::size_t i, std::size_t j);
  // col_j -= q * col_i
  void column_axpy(std::size_t j, const Polynomial& q, std::size_t i);
  // row_j -= q * row_i
  void row_axpy(std::size_t j, const Polynomial& q, std::size_t i);

  std::size_t n_;
  std::vector<Polynomial> a_;
};

}  // namespace vml
