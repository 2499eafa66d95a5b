#include "vml/torus.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vml/error.hpp"
#include "vml/kernels.hpp"

namespace vml {

FlatTorus::FlatTorus(Complex period1, Complex period2)
    : period1_(period1), period2_(period2) {
  if (!std::isfinite(period1.real()) || !std::isfinite(period1.imag()) ||
      !std::isfinite(period2.real()) || !std::isfinite(period2.imag())) {
    throw Error(ErrorCode::InvalidTorus, "periods must be finite");
  }
  const double det =
      period1.real() * period2.imag() - period1.imag() * period2.real();
  volume_ = std::abs(det);
  const double scale = std::abs(period1) * std::abs(period2);
  if (!(volume_ > 1e-12 * scale) || !(volume_ > 0.0)) {
    throw Error(ErrorCode::InvalidTorus, "periods are linearly dependent");
  }
  // Inverse of [[w1x, w2x], [w1y, w2y]].
  dual_[0] = {period2.imag() / det, -period2.real() / det};
  dual_[1] = {-period1.imag() / det, period1.real() / det};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      dual_gram_[a][b] = dual_[a][0] * dual_[b][0] + dual_[a][1] * dual_[b][1];
}

FlatTorus FlatTorus::square_of_area(double volume) {
  if (!(volume > 0.0)) throw Error(ErrorCode::InvalidTorus, "area must be positive");
  return square(std::sqrt(volume));
}

std::array<double, 2> FlatTorus::to_fractional(Complex z) const noexcept {
  return {dual_[0][0] * z.real() + dual_[0][1] * z.imag(),
          dual_[1][0] * z.real() + dual_[1][1] * z.imag()};
}

Complex FlatTorus::from_fractional(double s1, double s2) const noexcept {
  return s1 * period1_ + s2 * period2_;
}

std::array<double, 2> FlatTorus::wrap_fractional(Complex z) const noexcept {
  auto s = to_fractional(z);
  for (auto& c : s) {
    c -= std::floor(c);
    if (c >= 1.0) c = 0.0;
  }
  return s;
}

double FlatTorus::wave_norm2(double m1, double m2) const noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return two_pi * two_pi *
         (m1 * m1 * dual_gram_[0][0] + 2.0 * m1 * m2 * dual_gram_[0][1] +
          m2 * m2 * dual_gram_[1][1]);
}

double FlatTorus::lattice_distance(Complex z) const noexcept {
  const auto s = wrap_fractional(z);
  const Complex base = from_fractional(s[0], s[1]);
  double best = std::numeric_limits<double>::infinity();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      best = std::min(best, std::abs(base + double(a) * period1_ + double(b) * period2_));
  return best;
}

Grid::Grid(int n1_, int n2_) : n1(n1_), n2(n2_) {
  if (n1 < 8 || n2 < 8 || n1 % 2 != 0 || n2 % 2 != 0) {
    throw Error(ErrorCode::InvalidGrid,
                "grid sizes must be even and >= 8, got " + std::to_string(n1) +
                    "x" + std::to_string(n2));
  }
}

ScalarField::ScalarField(FlatTorus torus, Grid grid)
    : torus_(torus), grid_(grid), values_(grid.size(), 0.0), zero_mean_(true) {}

ScalarField::ScalarField(FlatTorus torus, Grid grid, std::vector<double> values,
                         bool zero_mean)
    : torus_(torus), grid_(grid), values_(std::move(values)), zero_mean_(zero_mean) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorCode::InvalidField,
                "expected " + std::to_string(grid_.size()) + " samples, got " +
                    std::to_string(values_.size()));
  }
}

Complex ScalarField::point(int i, int j) const noexcept {
  return torus_.from_fractional(double(i) / grid_.n1, double(j) / grid_.n2);
}

bool ScalarField::all_finite() const noexcept {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

double ScalarField::mean() const noexcept {
  return kernels::sum(values_) / double(values_.size());
}

double ScalarField::sup_norm() const noexcept { return kernels::sup_norm(values_); }

double ScalarField::l2_norm() const noexcept {
  return std::sqrt(kernels::dot(values_, values_) * torus_.volume() /
                   double(values_.size()));
}

double ScalarField::inner(const ScalarField& other) const {
  check_compatible(other);
  return kernels::dot(values_, other.values_) * torus_.volume() /
         double(values_.size());
}

void ScalarField::check_compatible(const ScalarField& other) const {
  if (!(grid_ == other.grid_) || !(torus_ == other.torus_)) {
    throw Error(ErrorCode::InvalidField, "fields live on different grids or tori");
  }
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  check_compatible(other);
  kernels::axpy(1.0, other.values_, values_);
  zero_mean_ = zero_mean_ && other.zero_mean_;
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  check_compatible(other);
  kernels::axpy(-1.0, other.values_, values_);
  zero_mean_ = zero_mean_ && other.zero_mean_;
  return *this;
}

ScalarField& ScalarField::operator*=(double s) noexcept {
  kernels::scale(s, values_);
  return *this;
}

}  // namespace vml
