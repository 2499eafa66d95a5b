#pragma once

// Grid kernels used by the spectral operators and the vortex solver.
//
// Every kernel exists twice with the same signature: `serial` is the plain
// reference loop, `parallel` is the OpenMP version. The unqualified names in
// vml::kernels forward to the parallel version. Tests compare the two and
// bench/ times them against each other.

#include <complex>
#include <cstddef>
#include <span>

namespace vml::kernels {

/// Point charge for the Green background: fractional position on the torus
/// and its weight (multiplicity).
struct ModeSource {
  double s1;
  double s2;
  double weight;
};

/// Inputs shared by the per-mode Green assembly.
struct GreenModeParams {
  int n1;
  int n2;
  double volume;
  std::span<const double> wave_norm2;  // |k|^2 per stored mode, row-major
};

#define VML_KERNEL_DECLS                                                      \
  double sum(std::span<const double> x) noexcept;                             \
  double dot(std::span<const double> x, std::span<const double> y) noexcept;  \
  double sup_norm(std::span<const double> x) noexcept;                        \
  void axpy(double a, std::span<const double> x, std::span<double> y) noexcept; \
  void scale(double a, std::span<double> x) noexcept;                         \
  void multiply_modes(std::span<std::complex<double>> modes,                  \
                      std::span<const double> multiplier) noexcept;           \
  void vortex_residual(std::span<const double> lap_v,                         \
                       std::span<const double> h0, std::span<const double> v, \
                       double coupling, double background,                    \
                       std::span<double> residual,                            \
                       std::span<double> weight) noexcept;                    \
  void shifted_operator(std::span<const double> lap_x,                        \
                        std::span<const double> weight,                       \
                        std::span<const double> x,                            \
                        std::span<double> out) noexcept;                      \
  void green_modes(const GreenModeParams& params,                             \
                   std::span<const ModeSource> sources,                       \
                   std::span<std::complex<double>> modes) noexcept;

namespace serial {
VML_KERNEL_DECLS
}  // namespace serial

namespace parallel {
VML_KERNEL_DECLS
}  // namespace parallel

#undef VML_KERNEL_DECLS

/// Caps the number of OpenMP threads (0 restores the runtime default).
void set_max_threads(int threads) noexcept;
int max_threads() noexcept;
/// Reads VML_THREADS from the environment, if set.
void configure_threads_from_env() noexcept;

using parallel::axpy;
using parallel::dot;
using parallel::green_modes;
using parallel::multiply_modes;
using parallel::scale;
using parallel::shifted_operator;
using parallel::sum;
using parallel::sup_norm;
using parallel::vortex_residual;

}  // namespace vml::kernels
