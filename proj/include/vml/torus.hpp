#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace vml {

using Complex = std::complex<double>;

/// Flat torus C / (Z*period1 + Z*period2) with the Euclidean metric and
/// area form dA.
class FlatTorus {
 public:
  FlatTorus(Complex period1, Complex period2);

  static FlatTorus square(double side) { return {side, Complex(0.0, side)}; }
  static FlatTorus rectangle(double width, double height) {
    return {width, Complex(0.0, height)};
  }
  /// Square torus of the given area.
  static FlatTorus square_of_area(double volume);

  Complex period1() const noexcept { return period1_; }
  Complex period2() const noexcept { return period2_; }
  double volume() const noexcept { return volume_; }

  /// Coordinates (s1, s2) with z = s1*period1 + s2*period2.
  std::array<double, 2> to_fractional(Complex z) const noexcept;
  Complex from_fractional(double s1, double s2) const noexcept;
  /// Representative of z in the fundamental domain [0,1)^2 (fractional).
  std::array<double, 2> wrap_fractional(Complex z) const noexcept;

  /// |k|^2 for the dual-lattice wave vector k = 2*pi*(m1*b1 + m2*b2).
  double wave_norm2(double m1, double m2) const noexcept;
  double dual_gram(int i, int j) const noexcept { return dual_gram_[i][j]; }

  /// Shortest distance from z to the lattice (brute force over nearby cells).
  double lattice_distance(Complex z) const noexcept;

  friend bool operator==(const FlatTorus&, const FlatTorus&) = default;

 private:
  Complex period1_;
  Complex period2_;
  double volume_;
  // Rows of the inverse period matrix.
  std::array<std::array<double, 2>, 2> dual_;
  std::array<std::array<double, 2>, 2> dual_gram_;
};

/// Sampling grid: n1 points along period1 and n2 along period2.
struct Grid {
  Grid(int n1, int n2);

  int n1;
  int n2;

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);
  }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n2) +
           static_cast<std::size_t>(j);
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Real field sampled at the grid points x(i,j) = (i/n1)*period1 +
/// (j/n2)*period2, stored row-major in i.
class ScalarField {
 public:
  ScalarField(FlatTorus torus, Grid grid);
  ScalarField(FlatTorus torus, Grid grid, std::vector<double> values,
              bool zero_mean = false);

  /// Samples f at every grid point.
  template <class F>
  static ScalarField sample(const FlatTorus& torus, const Grid& grid, F&& f) {
    ScalarField out(torus, grid);
    for (int i = 0; i < grid.n1; ++i)
      for (int j = 0; j < grid.n2; ++j)
        out.values_[grid.index(i, j)] = f(out.point(i, j));
    return out;
  }

  const FlatTorus& torus() const noexcept { return torus_; }
  const Grid& grid() const noexcept { return grid_; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double operator()(int i, int j) const noexcept {
    return values_[grid_.index(i, j)];
  }
  double& operator()(int i, int j) noexcept {
    return values_[grid_.index(i, j)];
  }

  Complex point(int i, int j) const noexcept;

  /// True when the field was produced with its zero mode pinned to 0.
  bool zero_mean() const noexcept { return zero_mean_; }
  void set_zero_mean(bool flag) noexcept { zero_mean_ = flag; }

  bool all_finite() const noexcept;
  double mean() const noexcept;
  /// Trapezoidal (spectrally exact for band-limited data) integral over the
  /// torus.
  double integral() const noexcept { return mean() * torus_.volume(); }
  double sup_norm() const noexcept;
  double l2_norm() const noexcept;
  /// L2 inner product with the area measure.
  double inner(const ScalarField& other) const;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s) noexcept;

  friend ScalarField operator+(ScalarField a, const ScalarField& b) {
    a += b;
    return a;
  }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) {
    a -= b;
    return a;
  }

 private:
  void check_compatible(const ScalarField& other) const;

  FlatTorus torus_;
  Grid grid_;
  std::vector<double> values_;
  bool zero_mean_ = false;
};

}  // namespace vml
