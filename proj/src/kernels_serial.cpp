#include <algorithm>
#include <cmath>
#include <numbers>

#include "vml/kernels.hpp"

namespace vml::kernels::serial {

double sum(std::span<const double> x) noexcept {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double dot(std::span<const double> x, std::span<const double> y) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double sup_norm(std::span<const double> x) noexcept {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

void axpy(double a, std::span<const double> x, std::span<double> y) noexcept {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void scale(double a, std::span<double> x) noexcept {
  for (double& v : x) v *= a;
}

void multiply_modes(std::span<std::complex<double>> modes,
                    std::span<const double> multiplier) noexcept {
  for (std::size_t k = 0; k < modes.size(); ++k) modes[k] *= multiplier[k];
}

void vortex_residual(std::span<const double> lap_v, std::span<const double> h0,
                     std::span<const double> v, double coupling,
                     double background, std::span<double> residual,
                     std::span<double> weight) noexcept {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double eh = std::exp(h0[i] + v[i]);
    residual[i] = lap_v[i] - coupling * (eh - 1.0) - background;
    weight[i] = coupling * eh;
  }
}

void shifted_operator(std::span<const double> lap_x,
                      std::span<const double> weight,
                      std::span<const double> x,
                      std::span<double> out) noexcept {
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = -lap_x[i] + weight[i] * x[i];
}

void green_modes(const GreenModeParams& p, std::span<const ModeSource> sources,
                 std::span<std::complex<double>> modes) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double prefactor = -4.0 * std::numbers::pi / p.volume;
  for (int a = 0; a < p.n1; ++a) {
    const int m1 = a < p.n1 / 2 ? a : a - p.n1;
    for (int b = 0; b < p.n2; ++b) {
      const int m2 = b < p.n2 / 2 ? b : b - p.n2;
      const std::size_t k = std::size_t(a) * std::size_t(p.n2) + std::size_t(b);
      if ((m1 == 0 && m2 == 0) || 2 * m1 == -p.n1 || 2 * m2 == -p.n2) {
        modes[k] = 0.0;
        continue;
      }
      std::complex<double> acc = 0.0;
      for (const auto& src : sources)
        acc += src.weight * std::polar(1.0, -two_pi * (m1 * src.s1 + m2 * src.s2));
      modes[k] = prefactor / p.wave_norm2[k] * acc;
    }
  }
}

}  // namespace vml::kernels::serial
