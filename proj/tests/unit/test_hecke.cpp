#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random_data.hpp"
#include "vml/algebra_io.hpp"
#include "vml/error.hpp"
#include "vml/hecke.hpp"

using namespace vml;

namespace {

const GaussianRational kZero(0);

Polynomial z_minus(long long x) { return Polynomial::linear(x); }

std::vector<GaussianRational> vec(std::initializer_list<long long> xs) {
  std::vector<GaussianRational> v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

// Left multiplication by a unimodular matrix (row operations).
PolyMatrix random_left_unimodular(testing::Rng& rng, std::size_t n) {
  PolyMatrix u = PolyMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < 5; ++k) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    PolyMatrix e = PolyMatrix::identity(n);
    e(i, j) = Polynomial({GaussianRational(std::uniform_int_distribution<int>(-2, 2)(rng)),
                          GaussianRational(std::uniform_int_distribution<int>(-2, 2)(rng))});
    u = e * u;
  }
  return u;
}

}  // namespace

TEST_CASE("hyperplanes are canonical and validated") {
  const Hyperplane h({GaussianRational(0), GaussianRational(2), GaussianRational(4)});
  CHECK(h.covector() == vec({0, 1, 2}));
  CHECK(h == Hyperplane(vec({0, -3, -6})));
  CHECK(h.contains(vec({5, 2, -1})));
  CHECK_THROWS_AS(Hyperplane(vec({0, 0})), Error);
  CHECK(Hyperplane::coordinate(3, 1).covector() == vec({0, 1, 0}));
}

TEST_CASE("single modification of the trivial lattice") {
  const PolyMatrix m = elementary_modification(PolyMatrix::identity(2),
                                               {kZero, Hyperplane::coordinate(2, 0)});
  CHECK(m == PolyMatrix::diagonal({z_minus(0), Polynomial(1)}));
  CHECK(normalized_determinant(m) == z_minus(0));
  CHECK(local_type(m, kZero) == std::vector<int>{0, 1});
}

TEST_CASE("modifications at distinct points multiply the determinant") {
  const TowerDatum datum{{{kZero, {Hyperplane::coordinate(2, 0)}},
                          {GaussianRational(1), {Hyperplane(vec({1, 1}))}}}};
  const PolyMatrix m = build_tower(2, datum);
  CHECK(normalized_determinant(m) == z_minus(0) * z_minus(1));
}

TEST_CASE("n coordinate modifications at one point give a full twist") {
  for (std::size_t n = 2; n <= 4; ++n) {
    TowerGroup g{GaussianRational(3), {}};
    for (std::size_t k = 0; k < n; ++k) g.hyperplanes.push_back(Hyperplane::coordinate(n, k));
    const PolyMatrix m = build_tower(n, TowerDatum{{g}});
    PolyMatrix twist(n);
    for (std::size_t k = 0; k < n; ++k) twist(k, k) = z_minus(3);
    CHECK(m == twist);
  }
}

TEST_CASE("nested and transverse double modifications") {
  const TowerDatum nested{{{kZero, {Hyperplane(vec({1, 0})), Hyperplane(vec({1, 0}))}}}};
  const TowerDatum transverse{{{kZero, {Hyperplane(vec({1, 0})), Hyperplane(vec({0, 1}))}}}};
  const PolyMatrix mn = build_tower(2, nested), mt = build_tower(2, transverse);
  CHECK(local_type(mn, kZero) == std::vector<int>{0, 2});
  CHECK(local_type(mt, kZero) == std::vector<int>{1, 1});
  CHECK(oracle::local_type_by_minors(mn, kZero) == std::vector<int>{0, 2});
  CHECK(oracle::local_type_by_minors(mt, kZero) == std::vector<int>{1, 1});
  const auto inv = mn.invariant_factors();
  CHECK(inv[0] == Polynomial(1));
  CHECK(inv[1] == z_minus(0) * z_minus(0));
}

TEST_CASE("fiber frames") {
  const FiberFrame id = fiber_coordinates(PolyMatrix::identity(3), GaussianRational(5));
  CHECK(id.values == ConstMatrix::identity(3));
  CHECK_FALSE(id.modified);

  const PolyMatrix m = elementary_modification(PolyMatrix::identity(2),
                                               {kZero, Hyperplane(vec({1, -1}))});
  const FiberFrame at0 = fiber_coordinates(m, kZero);
  CHECK(at0.modified);
  CHECK(at0.rank == 1);
  REQUIRE(at0.kernel.size() == 1);
  // The direction that dies sits in the modified column only.
  const ConstMatrix v = at0.values;
  GaussianRational s0, s1;
  for (std::size_t c = 0; c < 2; ++c) {
    s0 += v(0, c) * at0.kernel[0][c];
    s1 += v(1, c) * at0.kernel[0][c];
  }
  CHECK(s0.is_zero());
  CHECK(s1.is_zero());

  const FiberFrame away = fiber_coordinates(m, GaussianRational(7));
  CHECK_FALSE(away.modified);
  CHECK(away.values == ConstMatrix::identity(2));
}

TEST_CASE("divisor map and its section") {
  const TowerDatum datum{{{kZero, {Hyperplane(vec({1, 2})), Hyperplane(vec({3, 1}))}},
                          {GaussianRational(1), {Hyperplane(vec({1, 1}))}}}};
  const PolyMatrix m = build_tower(2, datum);
  const ExactDivisor d = phi_divisor(m, datum.points());
  CHECK(d.multiplicity_at(kZero) == 2);
  CHECK(d.multiplicity_at(GaussianRational(1)) == 1);
  CHECK(d.degree() == 3);
  CHECK_THROWS_AS(phi_divisor(m, {kZero}), Error);
  CHECK(phi_divisor(PolyMatrix::identity(3), {}).empty());

  ExactDivisor D;
  D.add(kZero, 2);
  D.add(GaussianRational(3), 1);
  const PolyMatrix th = theta_section(3, D);
  CHECK(th == PolyMatrix::diagonal({z_minus(0) * z_minus(0) * z_minus(3), Polynomial(1), Polynomial(1)}));
  CHECK(phi_divisor(th, {kZero, GaussianRational(3)}) == D);
  CHECK(local_type(th, kZero) == std::vector<int>{0, 0, 2});
  ExactDivisor one;
  one.add(kZero, 1);
  CHECK(theta_section(2, one) == PolyMatrix::diagonal({z_minus(0), Polynomial(1)}));
}

TEST_CASE("datum validation") {
  const TowerDatum dup{{{kZero, {Hyperplane(vec({1, 0}))}}, {kZero, {Hyperplane(vec({0, 1}))}}}};
  CHECK_THROWS_AS(build_tower(2, dup), Error);
  const TowerDatum wrong{{{kZero, {Hyperplane(vec({1, 0, 0}))}}}};
  CHECK_THROWS_AS(build_tower(2, wrong), Error);
  CHECK_THROWS_AS(datum_from_json(parse_json_text(R"({"groups": [{"point": "0", "hyperplanes": [[0, 0]]}]})"), 2),
                  Error);
}

TEST_CASE("datum JSON round trip") {
  const auto j = parse_json_text(
      R"({"groups": [{"point": "1/2+i", "hyperplanes": [["1", 2], [0.5, "i"]]}]})");
  const TowerDatum d = datum_from_json(j, 2);
  CHECK(d.groups[0].point == GaussianRational(Rational(1, 2), Rational(1)));
  CHECK(datum_from_json(to_json(d), 2).groups[0].hyperplanes == d.groups[0].hyperplanes);
}

TEST_CASE("random towers: degree, support and local types") {
  testing::Rng rng(101);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const int d = std::uniform_int_distribution<int>(1, 5)(rng);
    const TowerDatum datum = testing::random_datum(rng, n, d);
    PolyMatrix m = PolyMatrix::identity(n);
    // Degree grows by one per step.
    int steps = 0;
    for (const auto& g : datum.groups)
      for (const auto& h : g.hyperplanes) {
        m = elementary_modification(m, {g.point, h});
        CHECK(m.determinant().degree() == ++steps);
      }
    CHECK(m == build_tower(n, datum));
    const ExactDivisor phi = phi_divisor(m, datum.points());
    const PolyMatrix u = random_left_unimodular(rng, n);
    const PolyMatrix um = u * m;
    CHECK(phi_divisor(um, datum.points()) == phi);
    for (const auto& g : datum.groups) {
      const auto type = local_type(m, g.point);
      CHECK(type == oracle::local_type_by_minors(m, g.point));
      CHECK(local_type(um, g.point) == type);
      int sum = 0;
      for (int a : type) sum += a;
      CHECK(sum == phi.multiplicity_at(g.point));
    }
  }
}

TEST_CASE("generic data at one point: transverse and cyclic types") {
  testing::Rng rng(202);
  int total = 0, cyclic_hits = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t mult = 1; mult <= 3; ++mult)
      for (int t = 0; t < 5; ++t) {
        const GaussianRational x = testing::random_scalar(rng);
        // Transverse: each hyperplane is pulled back from a random hyperplane
        // of the trivial fiber, so it contains every direction that dies there.
        PolyMatrix m = PolyMatrix::identity(n);
        PolyMatrix cyc = PolyMatrix::identity(n);
        for (std::size_t k = 0; k < mult; ++k) {
          const FiberFrame f = fiber_coordinates(m, x);
          const auto y = testing::random_hyperplane(rng, n).covector();
          std::vector<GaussianRational> c(n);
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) c[j] += y[i] * f.values(i, j);
          bool zero = true;
          for (const auto& e : c) zero = zero && e.is_zero();
          if (zero) c = f.kernel.front();  // values vanish entirely: any choice is transverse
          m = elementary_modification(m, {x, Hyperplane(c)});
          cyc = elementary_modification(cyc, {x, testing::random_hyperplane(rng, n)});
        }
        const std::size_t ones = std::min(mult, n);
        std::vector<int> want(n, 0);
        // Exponents ascend; with mult > n some entries exceed one.
        for (std::size_t k = 0; k < mult; ++k) ++want[n - 1 - (k % n)];
        std::sort(want.begin(), want.end());
        const auto got = local_type(m, x);
        CHECK(got == oracle::local_type_by_minors(m, x));
        if (mult <= n) {
          CHECK(std::count(got.begin(), got.end(), 1) == static_cast<long>(ones));
          CHECK(got == want);
        }
        // Unconstrained random hyperplanes usually miss the kernel, which
        // produces a single cyclic block (0, ..., 0, mult).
        std::vector<int> cyclic(n, 0);
        cyclic.back() = static_cast<int>(mult);
        const auto cyc_type = local_type(cyc, x);
        CHECK(cyc_type == oracle::local_type_by_minors(cyc, x));
        ++total;
        if (cyc_type == cyclic) ++cyclic_hits;
      }
  CHECK(2 * cyclic_hits > total);
}
