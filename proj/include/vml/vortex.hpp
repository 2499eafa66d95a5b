#pragma once

#include <vector>

#include "vml/divisor.hpp"
#include "vml/error.hpp"
#include "vml/torus.hpp"

namespace vml {

/// Abelian (rank one) vortex problem on a flat torus at the self-dual point.
///
/// Writing |u|^2 = tau * exp(h) in holomorphic gauge, the vortex equations
/// reduce to
///
///     Lap h = e^2 tau (e^h - 1) + 4 pi sum_i m_i delta_{x_i},
///
/// with F_A = (i e^2 / 2)(|u|^2 - tau) dA and moment map
/// mu(u) = -(i/2)(|u|^2 - tau). Splitting h = h0 + v with the Green
/// background h0 leaves a smooth equation for v:
///
///     Lap v = e^2 tau (e^{h0+v} - 1) + 4 pi d / Vol.
struct VortexProblem {
  FlatTorus torus;
  Grid grid;
  EffectiveDivisor divisor;
  double e = 1.0;
  double tau = 1.0;
  double xi = 1.0;

  int degree() const noexcept { return divisor.degree(); }
  /// Throws InvalidArgument on non-positive couplings or xi != 1.
  void validate() const;
};

struct BradlowReport {
  bool feasible;
  /// e^2 tau Vol - 4 pi d; feasibility needs it strictly positive.
  double margin;
};

BradlowReport check_bradlow(const VortexProblem& problem);

struct VortexSolution {
  VortexProblem problem;
  ScalarField v;  // smooth correction
  ScalarField h;  // h0 + v, |u|^2 = tau e^h
  double tolerance = 0.0;
  double residual_sup = 0.0;
  int newton_iters = 0;
  int cg_iters = 0;
  std::vector<double> residual_history;  // sup-norm residual per iterate
  double energy = 0.0;
  double flux = 0.0;
  double magnetic_energy = 0.0;
  double potential_energy = 0.0;
  double gradient_energy = 0.0;

  /// |u|^2 sampled on the grid.
  ScalarField modulus_squared() const;
};

struct EnergyReport {
  double total;
  double bogomolnyi_bound;  // pi tau d
  double magnetic;          // (1/2e^2) int |F|^2, F read off the gauge field
  double potential;         // (e^2/2) int |mu(u)|^2
  double gradient;          // (1/2) int |d_A u|^2
  double bogomolnyi_remainder;  // (1/2) int |F/e + e mu|^2, zero at a solution
};

class BradlowViolationError : public Error {
 public:
  explicit BradlowViolationError(BradlowReport report);
  const BradlowReport& report() const noexcept { return report_; }

 private:
  BradlowReport report_;
};

/// Thrown when Newton stalls; carries the last iterate.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(VortexSolution last);
  const VortexSolution& last_iterate() const noexcept { return last_; }

 private:
  VortexSolution last_;
};

inline constexpr double kDefaultSolveTolerance = 1e-10;
inline constexpr int kDefaultGridSize = 256;

/// Damped Newton on the reduced equation, starting from v = 0. Each
/// linearization (Lap - e^2 tau e^h) dv = -R is solved by conjugate
/// gradients preconditioned with (-Lap + mean weight)^{-1}. Converged when
/// the sup-norm residual is <= tol.
VortexSolution solve(const VortexProblem& problem,
                     double tol = kDefaultSolveTolerance, int max_iters = 100);

/// -(e^2 / 4 pi) int (|u|^2 - tau) dA; equals the degree at a solution.
double flux(const VortexSolution& solution);

EnergyReport energy_report(const VortexSolution& solution);

}  // namespace vml
