#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vml/divisor.hpp"
#include "vml/torus.hpp"

namespace vml {

/// FFT plans, Fourier multiplier tables and scratch space for one
/// (torus, grid) pair. Not shareable across threads; make one per solve.
///
/// Mode (a, b) of the stored spectrum carries frequency m1 = a for
/// a < n1/2 and a - n1 otherwise (same for b). Its Laplace symbol is
/// |k|^2 = 4 pi^2 |m1 b1 + m2 b2|^2 with b1, b2 the dual basis, except that
/// the m1*m2 cross term is dropped on Nyquist rows/columns. That keeps the
/// symbol even under k -> -k on the discrete spectrum, so real fields map to
/// real fields on oblique tori as well.
class SpectralContext {
 public:
  SpectralContext(const FlatTorus& torus, const Grid& grid);
  ~SpectralContext();
  SpectralContext(const SpectralContext&) = delete;
  SpectralContext& operator=(const SpectralContext&) = delete;
  SpectralContext(SpectralContext&&) noexcept;
  SpectralContext& operator=(SpectralContext&&) noexcept;

  const FlatTorus& torus() const noexcept { return torus_; }
  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> wave_norm2() const noexcept { return wave_norm2_; }

  /// Spectral Laplacian; the output has zero mean.
  void laplacian(std::span<const double> in, std::span<double> out);
  /// Inverse Laplacian on the mean-zero subspace; zero mode pinned to 0.
  void inverse_laplacian(std::span<const double> in, std::span<double> out);
  /// (-Laplacian + shift)^{-1} for shift > 0.
  void shifted_inverse(std::span<const double> in, std::span<double> out,
                       double shift);
  /// Real part of sum_k modes[k] e^{i k.x} at the grid points.
  void synthesize(std::span<const std::complex<double>> modes,
                  std::span<double> out);
  /// Fourier coefficients c_k with f(x) = sum_k c_k e^{i k.x}.
  void analyze(std::span<const double> in,
               std::span<std::complex<double>> modes);

 private:
  void apply_multiplier(std::span<const double> in, std::span<double> out,
                        std::span<const double> multiplier);
  void apply_mean_free(std::span<const double> in, std::span<double> out,
                       std::span<const double> multiplier);
  // Forward FFT of scratch_, multiply, backward FFT into out.
  void transform_in_place(std::span<double> out,
                          std::span<const double> multiplier);

  FlatTorus torus_;
  Grid grid_;
  std::vector<double> wave_norm2_;
  std::vector<double> laplace_symbol_;
  std::vector<double> inverse_symbol_;
  std::vector<double> shifted_symbol_;
  std::vector<std::complex<double>> scratch_;
  void* forward_ = nullptr;
  void* backward_ = nullptr;
};

ScalarField laplacian(const ScalarField& f);
ScalarField inverse_laplacian(const ScalarField& f);

/// Background field h0 with Laplacian 4 pi sum m_i delta_{x_i} - 4 pi d/Vol
/// in the band-limited sense, zero mean. Dirac masses enter as exact
/// characters, so divisor points need not sit on grid nodes.
ScalarField green_background(const FlatTorus& torus, const Grid& grid,
                             const EffectiveDivisor& divisor);

}  // namespace vml
