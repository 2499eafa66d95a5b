#include "vml/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <utility>

#include "vml/error.hpp"
#include "vml/kernels.hpp"

namespace vml {

namespace {

// FFTW's planner is not thread-safe; execution with new-array functions is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(p);
}

int frequency(int index, int n) { return index < n / 2 ? index : index - n; }

}  // namespace

SpectralContext::SpectralContext(const FlatTorus& torus, const Grid& grid)
    : torus_(torus), grid_(grid) {
  const std::size_t n = grid.size();
  wave_norm2_.resize(n);
  laplace_symbol_.resize(n);
  inverse_symbol_.resize(n);
  shifted_symbol_.resize(n);
  scratch_.resize(n);

  const double g00 = torus.dual_gram(0, 0);
  const double g01 = torus.dual_gram(0, 1);
  const double g11 = torus.dual_gram(1, 1);
  constexpr double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
  const double norm = 1.0 / double(n);
  for (int a = 0; a < grid.n1; ++a) {
    const int m1 = frequency(a, grid.n1);
    const bool nyq1 = 2 * m1 == -grid.n1;
    for (int b = 0; b < grid.n2; ++b) {
      const int m2 = frequency(b, grid.n2);
      const bool nyq2 = 2 * m2 == -grid.n2;
      const double cross = (nyq1 || nyq2) ? 0.0 : 2.0 * m1 * m2 * g01;
      const double k2 =
          four_pi2 * (double(m1) * m1 * g00 + cross + double(m2) * m2 * g11);
      const std::size_t k = grid.index(a, b);
      wave_norm2_[k] = k2;
      // Symbols include the 1/N of the unnormalized FFT round trip.
      laplace_symbol_[k] = -k2 * norm;
      inverse_symbol_[k] = k == 0 ? 0.0 : -norm / k2;
    }
  }

  std::lock_guard lock(planner_mutex());
  forward_ = fftw_plan_dft_2d(grid.n1, grid.n2, as_fftw(scratch_.data()),
                              as_fftw(scratch_.data()), FFTW_FORWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
  backward_ = fftw_plan_dft_2d(grid.n1, grid.n2, as_fftw(scratch_.data()),
                               as_fftw(scratch_.data()), FFTW_BACKWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
}

SpectralContext::~SpectralContext() {
  if (forward_ == nullptr && backward_ == nullptr) return;
  std::lock_guard lock(planner_mutex());
  if (forward_) fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  if (backward_) fftw_destroy_plan(static_cast<fftw_plan>(backward_));
}

SpectralContext::SpectralContext(SpectralContext&& other) noexcept
    : torus_(other.torus_),
      grid_(other.grid_),
      wave_norm2_(std::move(other.wave_norm2_)),
      laplace_symbol_(std::move(other.laplace_symbol_)),
      inverse_symbol_(std::move(other.inverse_symbol_)),
      shifted_symbol_(std::move(other.shifted_symbol_)),
      scratch_(std::move(other.scratch_)),
      forward_(std::exchange(other.forward_, nullptr)),
      backward_(std::exchange(other.backward_, nullptr)) {}

SpectralContext& SpectralContext::operator=(SpectralContext&& other) noexcept {
  if (this != &other) {
    SpectralContext tmp(std::move(other));
    std::swap(torus_, tmp.torus_);
    std::swap(grid_, tmp.grid_);
    wave_norm2_.swap(tmp.wave_norm2_);
    laplace_symbol_.swap(tmp.laplace_symbol_);
    inverse_symbol_.swap(tmp.inverse_symbol_);
    shifted_symbol_.swap(tmp.shifted_symbol_);
    scratch_.swap(tmp.scratch_);
    std::swap(forward_, tmp.forward_);
    std::swap(backward_, tmp.backward_);
  }
  return *this;
}

void SpectralContext::apply_multiplier(std::span<const double> in,
                                       std::span<double> out,
                                       std::span<const double> multiplier) {
  for (std::size_t i = 0; i < in.size(); ++i) scratch_[i] = in[i];
  transform_in_place(out, multiplier);
}

void SpectralContext::transform_in_place(std::span<double> out,
                                         std::span<const double> multiplier) {
  fftw_execute_dft(static_cast<fftw_plan>(forward_), as_fftw(scratch_.data()),
                   as_fftw(scratch_.data()));
  kernels::multiply_modes(scratch_, multiplier);
  fftw_execute_dft(static_cast<fftw_plan>(backward_), as_fftw(scratch_.data()),
                   as_fftw(scratch_.data()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scratch_[i].real();
}

void SpectralContext::apply_mean_free(std::span<const double> in,
                                      std::span<double> out,
                                      std::span<const double> multiplier) {
  // Both symbols vanish on the zero mode. Removing the mean first keeps a
  // large constant offset from feeding FFT roundoff into the high modes.
  const double mean = kernels::sum(in) / double(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) scratch_[i] = in[i] - mean;
  transform_in_place(out, multiplier);
}

void SpectralContext::laplacian(std::span<const double> in, std::span<double> out) {
  apply_mean_free(in, out, laplace_symbol_);
}

void SpectralContext::inverse_laplacian(std::span<const double> in,
                                        std::span<double> out) {
  apply_mean_free(in, out, inverse_symbol_);
}

void SpectralContext::shifted_inverse(std::span<const double> in,
                                      std::span<double> out, double shift) {
  const double norm = 1.0 / double(grid_.size());
  for (std::size_t k = 0; k < shifted_symbol_.size(); ++k)
    shifted_symbol_[k] = norm / (wave_norm2_[k] + shift);
  apply_multiplier(in, out, shifted_symbol_);
}

void SpectralContext::synthesize(std::span<const std::complex<double>> modes,
                                 std::span<double> out) {
  std::copy(modes.begin(), modes.end(), scratch_.begin());
  fftw_execute_dft(static_cast<fftw_plan>(backward_), as_fftw(scratch_.data()),
                   as_fftw(scratch_.data()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scratch_[i].real();
}

void SpectralContext::analyze(std::span<const double> in,
                              std::span<std::complex<double>> modes) {
  for (std::size_t i = 0; i < in.size(); ++i) modes[i] = in[i];
  fftw_execute_dft(static_cast<fftw_plan>(forward_), as_fftw(modes.data()),
                   as_fftw(modes.data()));
  const double norm = 1.0 / double(grid_.size());
  for (auto& c : modes) c *= norm;
}

namespace {

void require_finite(const ScalarField& f) {
  if (!f.all_finite()) throw Error(ErrorCode::InvalidField, "field has non-finite samples");
}

}  // namespace

ScalarField laplacian(const ScalarField& f) {
  require_finite(f);
  SpectralContext ctx(f.torus(), f.grid());
  ScalarField out(f.torus(), f.grid());
  ctx.laplacian(f.values(), out.values());
  out.set_zero_mean(true);
  return out;
}

ScalarField inverse_laplacian(const ScalarField& f) {
  require_finite(f);
  SpectralContext ctx(f.torus(), f.grid());
  ScalarField out(f.torus(), f.grid());
  ctx.inverse_laplacian(f.values(), out.values());
  out.set_zero_mean(true);
  return out;
}

ScalarField green_background(const FlatTorus& torus, const Grid& grid,
                             const EffectiveDivisor& divisor) {
  if (divisor.degree() == 0) {
    throw Error(ErrorCode::EmptyDivisor, "background requires a divisor of degree >= 1");
  }
  std::vector<kernels::ModeSource> sources;
  sources.reserve(divisor.size());
  for (const auto& e : divisor.entries()) {
    if (!std::isfinite(e.position.real()) || !std::isfinite(e.position.imag()))
      throw Error(ErrorCode::InvalidDivisor, "divisor point is not finite");
    const auto s = torus.wrap_fractional(e.position);
    sources.push_back({s[0], s[1], double(e.multiplicity)});
  }
  SpectralContext ctx(torus, grid);
  std::vector<std::complex<double>> modes(grid.size());
  kernels::green_modes({grid.n1, grid.n2, torus.volume(), ctx.wave_norm2()},
                       sources, modes);
  ScalarField out(torus, grid);
  ctx.synthesize(modes, out.values());
  out.set_zero_mean(true);
  return out;
}

}  // namespace vml
