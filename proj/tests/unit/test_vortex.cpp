#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vml/spectral.hpp"
#include "vml/vortex.hpp"

using namespace vml;
using std::numbers::pi;

namespace {

VortexProblem problem(FlatTorus t, std::vector<std::pair<Complex, int>> pts, int grid = 128,
                      double e = 1.0, double tau = 1.0) {
  EffectiveDivisor d;
  for (const auto& [z, m] : pts) d.add(z, m);
  return {t, Grid(grid, grid), d, e, tau, 1.0};
}

}  // namespace

TEST_CASE("Bradlow check examples") {
  auto r = check_bradlow(problem(FlatTorus::rectangle(50.0, 1.0), {{{0.1, 0.1}, 1}}));
  CHECK(r.feasible);
  CHECK(r.margin == doctest::Approx(50.0 - 4 * pi));

  r = check_bradlow(problem(FlatTorus::rectangle(4 * pi, 1.0), {{{0.1, 0.1}, 1}}));
  CHECK_FALSE(r.feasible);
  CHECK(r.margin == 0.0);

  r = check_bradlow(problem(FlatTorus::rectangle(10.0, 1.0), {{{0.1, 0.1}, 3}}, 128, 2.0));
  CHECK(r.feasible);
  CHECK(r.margin == doctest::Approx(40.0 - 12 * pi));
}

TEST_CASE("feasibility is monotone in the area") {
  for (double vol = 1.0; vol < 60.0; vol *= 1.37) {
    const auto a = check_bradlow(problem(FlatTorus::rectangle(vol, 1.0), {{{0.1, 0.1}, 2}}));
    const auto b = check_bradlow(problem(FlatTorus::rectangle(vol * 1.1, 1.0), {{{0.1, 0.1}, 2}}));
    CHECK(b.margin > a.margin);
    if (a.feasible) CHECK(b.feasible);
  }
}

TEST_CASE("input validation") {
  auto p = problem(FlatTorus::square_of_area(50.0), {{{1.0, 1.0}, 1}});
  CHECK_THROWS_AS(solve(p, 0.0), Error);
  p.xi = 2.0;
  CHECK_THROWS_AS(solve(p), Error);
  p.xi = 1.0;
  p.tau = -1.0;
  CHECK_THROWS_AS(solve(p), Error);
  auto q = problem(FlatTorus::square_of_area(3.0), {{{1.0, 1.0}, 1}});
  CHECK_THROWS_AS(solve(q), BradlowViolationError);
  try {
    solve(q);
  } catch (const BradlowViolationError& e) {
    CHECK(e.report().margin == doctest::Approx(3.0 - 4 * pi));
  }
}

TEST_CASE("vacuum: empty divisor") {
  const auto p = problem(FlatTorus::square_of_area(20.0), {}, 32);
  const auto s = solve(p);
  CHECK(s.v.sup_norm() == 0.0);
  const auto f = s.modulus_squared();
  for (double x : f.values()) CHECK(x == 1.0);
  CHECK(flux(s) == 0.0);
  CHECK(energy_report(s).total == 0.0);
}

TEST_CASE("d = 1 on area 50 satisfies the integral identity at 256^2") {
  const auto p = problem(FlatTorus::square_of_area(50.0), {{{1.3, 2.1}, 1}}, 256);
  const auto s = solve(p, 1e-10);
  CHECK(s.residual_sup <= 1e-10);
  const double target = 50.0 - 4 * pi;
  CHECK(std::abs(s.modulus_squared().integral() - target) <= 1e-8 * target);
  CHECK(std::abs(flux(s) - 1.0) <= 1e-9);
  const auto e = energy_report(s);
  CHECK(std::abs(e.total - pi) <= 1e-6 * pi);
  CHECK(std::abs(e.magnetic / e.potential - 1.0) <= 1e-8);
  CHECK(e.bogomolnyi_remainder <= 1e-12);
}

TEST_CASE("Newton converges quadratically in the terminal phase") {
  const auto p = problem(FlatTorus::square_of_area(50.0), {{{1.3, 2.1}, 1}}, 256);
  const auto s = solve(p, 1e-10);
  const auto& r = s.residual_history;
  REQUIRE(r.size() >= 4);
  // Last three steps. A step landing on the FFT roundoff floor (about 3e-12
  // in sup norm at 256^2) cannot show the quadratic rate and is skipped.
  constexpr double kRoundoffFloor = 1e-11;
  int tested = 0;
  for (std::size_t k = r.size() - 4; k + 1 < r.size(); ++k) {
    if (r[k + 1] <= kRoundoffFloor) continue;
    ++tested;
    CHECK(r[k + 1] <= 10.0 * r[k] * r[k]);
  }
  CHECK(tested >= 2);
}

TEST_CASE("bound for d = 2, tau = 3 is 6 pi and is attained") {
  const auto p = problem(FlatTorus::square_of_area(50.0), {{{1.0, 1.0}, 1}, {{4.0, 5.0}, 1}},
                         128, 1.0, 3.0);
  const auto s = solve(p);
  const auto e = energy_report(s);
  CHECK(e.bogomolnyi_bound == doctest::Approx(6 * pi).epsilon(1e-15));
  CHECK(std::abs(e.total - 6 * pi) <= 1e-6 * 6 * pi);
  CHECK(std::abs(flux(s) - 2.0) <= 2e-9);
}

TEST_CASE("positivity and logarithmic zeros") {
  const Complex x1{2.05, 3.11};
  const auto p = problem(FlatTorus::square_of_area(40.0), {{x1, 1}, {{5.0, 1.0}, 2}}, 128);
  const auto s = solve(p);
  const auto f = s.modulus_squared();
  for (double x : f.values()) CHECK(x > 0.0);
  // h - log|x - x1|^2 stays bounded on annuli around x1.
  const double cell = std::sqrt(40.0) / 128;
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 128; ++j) {
      const double r = std::abs(s.h.point(i, j) - x1);
      if (r < 4 * cell || r > 0.5) continue;
      const double reg = s.h(i, j) - std::log(r * r);
      lo = std::min(lo, reg);
      hi = std::max(hi, reg);
    }
  CHECK(hi - lo < 0.5);
}

TEST_CASE("translating the divisor by grid steps translates h") {
  const FlatTorus t = FlatTorus::square_of_area(30.0);
  const int n = 64;
  const double cell = std::sqrt(30.0) / n;
  const int di = 5, dj = 3;
  const Complex shift{di * cell, dj * cell};
  const auto a = solve(problem(t, {{{1.11, 0.7}, 1}, {{3.0, 2.5}, 1}}, n));
  const auto b = solve(problem(t, {{Complex{1.11, 0.7} + shift, 1}, {Complex{3.0, 2.5} + shift, 1}}, n));
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(b.h((i + di) % n, (j + dj) % n) - a.h(i, j)));
  CHECK(worst <= 1e-9);
}

TEST_CASE("points closer than a grid cell are accepted") {
  const auto p = problem(FlatTorus::square_of_area(50.0), {{{1.0, 1.0}, 1}, {{1.01, 1.0}, 1}}, 64);
  const auto s = solve(p);
  CHECK(std::abs(flux(s) - 2.0) <= 2e-9);
}

TEST_CASE("iteration cap raises NoConvergence with the last iterate") {
  const auto p = problem(FlatTorus::square_of_area(50.0), {{{1.0, 1.0}, 1}}, 64);
  try {
    solve(p, 1e-10, 1);
    FAIL("expected NoConvergenceError");
  } catch (const NoConvergenceError& e) {
    CHECK(e.code() == ErrorCode::NoConvergence);
    CHECK(e.last_iterate().newton_iters == 1);
    CHECK(e.last_iterate().residual_sup > 1e-10);
  }
}
