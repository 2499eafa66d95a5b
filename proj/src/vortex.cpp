#include "vml/vortex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vml/kernels.hpp"
#include "vml/spectral.hpp"

namespace vml {

namespace {

constexpr double pi = std::numbers::pi;

std::string margin_message(const BradlowReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "e^2 tau Vol - 4 pi d = " << r.margin << " is not positive";
  return os.str();
}

struct LinearSolveStats {
  int iterations = 0;
};

// Preconditioned CG for (-Lap + W) x = rhs.
LinearSolveStats solve_linearization(SpectralContext& ctx,
                                     std::span<const double> weight,
                                     std::span<const double> rhs,
                                     std::span<double> x, double rel_tol,
                                     int max_iters) {
  const std::size_t n = rhs.size();
  std::vector<double> r(rhs.begin(), rhs.end());
  std::vector<double> z(n), p(n), ap(n), lap(n);
  std::fill(x.begin(), x.end(), 0.0);

  const double shift = std::max(kernels::sum(weight) / double(n), 1e-12);
  const double rhs_norm = std::sqrt(kernels::dot(rhs, rhs));
  LinearSolveStats stats;
  if (rhs_norm == 0.0) return stats;

  ctx.shifted_inverse(r, z, shift);
  p = z;
  double rz = kernels::dot(r, z);
  for (int it = 0; it < max_iters; ++it) {
    ctx.laplacian(p, lap);
    kernels::shifted_operator(lap, weight, p, ap);
    const double alpha = rz / kernels::dot(p, ap);
    kernels::axpy(alpha, p, x);
    kernels::axpy(-alpha, ap, r);
    stats.iterations = it + 1;
    if (std::sqrt(kernels::dot(r, r)) <= rel_tol * rhs_norm) break;
    ctx.shifted_inverse(r, z, shift);
    const double rz_next = kernels::dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  return stats;
}

struct NewtonState {
  std::vector<double> v, lap_v, residual, weight;
  double sup = 0.0;
};

void evaluate(SpectralContext& ctx, std::span<const double> h0, double coupling,
              double background, NewtonState& s) {
  ctx.laplacian(s.v, s.lap_v);
  kernels::vortex_residual(s.lap_v, h0, s.v, coupling, background, s.residual,
                           s.weight);
  s.sup = kernels::sup_norm(s.residual);
}

struct Diagnostics {
  double flux, magnetic, potential, gradient, remainder;
};

// All integrals are grid means times the area, exact for band-limited data.
Diagnostics compute_diagnostics(const VortexProblem& p, const ScalarField& v,
                                const ScalarField& h) {
  const double e2 = p.e * p.e;
  const double vol = p.torus.volume();
  const double background = 4.0 * pi * p.degree() / vol;
  const ScalarField lap_v = laplacian(v);
  const std::size_t n = v.values().size();
  double s_dev = 0.0, s_dev2 = 0.0, s_b2 = 0.0, s_grad = 0.0, s_rem = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double eh = std::exp(h.values()[i]);
    const double f = p.tau * eh;
    const double dev = f - p.tau;
    // Smooth part of Lap h; the Dirac masses sit where |u| = 0.
    const double lap_h_reg = lap_v.values()[i] - background;
    const double b = -0.5 * lap_h_reg;
    s_dev += dev;
    s_dev2 += dev * dev;
    s_b2 += b * b;
    // |d_A u|^2 = (tau/2) e^h |grad h|^2, integrated by parts.
    s_grad += eh * lap_h_reg;
    const double rem = b - 0.5 * e2 * (p.tau - f);
    s_rem += rem * rem;
  }
  const double da = vol / double(n);
  Diagnostics d{};
  d.flux = -(e2 / (4.0 * pi)) * s_dev * da;
  d.potential = (e2 / 8.0) * s_dev2 * da;
  d.magnetic = s_b2 * da / (2.0 * e2);
  d.gradient = -(p.tau / 4.0) * s_grad * da;
  d.remainder = s_rem * da / (2.0 * e2);
  return d;
}

}  // namespace

void VortexProblem::validate() const {
  if (!(e > 0.0) || !std::isfinite(e))
    throw Error(ErrorCode::InvalidArgument, "coupling e must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  if (xi != 1.0)
    throw Error(ErrorCode::InvalidArgument, "only the self-dual point xi = 1 is supported");
  for (const auto& entry : divisor.entries()) {
    if (!std::isfinite(entry.position.real()) || !std::isfinite(entry.position.imag()))
      throw Error(ErrorCode::InvalidDivisor, "divisor point is not finite");
  }
  // Points that agree modulo the lattice must be merged by the caller.
  const auto& es = divisor.entries();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (torus.lattice_distance(es[a].position - es[b].position) == 0.0)
        throw Error(ErrorCode::InvalidDivisor, "divisor points coincide on the torus");
}

BradlowReport check_bradlow(const VortexProblem& p) {
  const double margin = p.e * p.e * p.tau * p.torus.volume() - 4.0 * pi * p.degree();
  return {margin > 0.0, margin};
}

BradlowViolationError::BradlowViolationError(BradlowReport report)
    : Error(ErrorCode::BradlowViolation, margin_message(report)), report_(report) {}

NoConvergenceError::NoConvergenceError(VortexSolution last)
    : Error(ErrorCode::NoConvergence,
            "Newton stopped after " + std::to_string(last.newton_iters) +
                " iterations with residual " + std::to_string(last.residual_sup)),
      last_(std::move(last)) {}

ScalarField VortexSolution::modulus_squared() const {
  ScalarField out = h;
  for (double& x : out.values()) x = problem.tau * std::exp(x);
  out.set_zero_mean(false);
  return out;
}

VortexSolution solve(const VortexProblem& problem, double tol, int max_iters) {
  problem.validate();
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const BradlowReport bradlow = check_bradlow(problem);
  if (!bradlow.feasible) throw BradlowViolationError(bradlow);

  const auto& torus = problem.torus;
  const auto& grid = problem.grid;
  const double coupling = problem.e * problem.e * problem.tau;
  const double background = 4.0 * pi * problem.degree() / torus.volume();

  ScalarField h0 = problem.divisor.empty() ? ScalarField(torus, grid)
                                           : green_background(torus, grid, problem.divisor);
  SpectralContext ctx(torus, grid);
  const std::size_t n = grid.size();

  NewtonState state{std::vector<double>(n, 0.0), std::vector<double>(n),
                    std::vector<double>(n), std::vector<double>(n)};
  evaluate(ctx, h0.values(), coupling, background, state);

  VortexSolution sol{problem, ScalarField(torus, grid), ScalarField(torus, grid), 0.0, 0.0, 0, 0, {}};
  sol.tolerance = tol;
  sol.residual_history.push_back(state.sup);

  NewtonState trial = state;
  std::vector<double> step(n);
  int iter = 0;
  while (state.sup > tol && iter < max_iters) {
    ++iter;
    // Forcing term proportional to the residual keeps convergence quadratic.
    const double forcing = std::clamp(state.sup, 1e-14, 1e-2);
    sol.cg_iters +=
        solve_linearization(ctx, state.weight, state.residual, step, forcing, 2000)
            .iterations;

    double t = 1.0;
    for (int halvings = 0;; ++halvings) {
      for (std::size_t i = 0; i < n; ++i) trial.v[i] = state.v[i] + t * step[i];
      evaluate(ctx, h0.values(), coupling, background, trial);
      if (std::isfinite(trial.sup) && (trial.sup < state.sup || halvings >= 30)) break;
      t *= 0.5;
    }
    std::swap(state, trial);
    sol.residual_history.push_back(state.sup);
    if (!std::isfinite(state.sup)) break;
  }

  sol.v = ScalarField(torus, grid, state.v);
  sol.h = h0 + sol.v;
  sol.h.set_zero_mean(false);
  sol.residual_sup = state.sup;
  sol.newton_iters = iter;

  const Diagnostics diag = compute_diagnostics(problem, sol.v, sol.h);
  sol.flux = diag.flux;
  sol.magnetic_energy = diag.magnetic;
  sol.potential_energy = diag.potential;
  sol.gradient_energy = diag.gradient;
  sol.energy = diag.magnetic + diag.potential + diag.gradient;

  if (!(state.sup <= tol)) throw NoConvergenceError(std::move(sol));
  return sol;
}

double flux(const VortexSolution& solution) {
  return compute_diagnostics(solution.problem, solution.v, solution.h).flux;
}

EnergyReport energy_report(const VortexSolution& solution) {
  const auto& p = solution.problem;
  const Diagnostics d = compute_diagnostics(p, solution.v, solution.h);
  return {d.magnetic + d.potential + d.gradient,
          pi * p.tau * p.degree(),
          d.magnetic,
          d.potential,
          d.gradient,
          d.remainder};
}

}  // namespace vml
