#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random_data.hpp"
#include "vml/error.hpp"
#include "vml/integer_snf.hpp"
#include "vml/poly_matrix.hpp"

using namespace vml;

namespace {

Polynomial random_poly(testing::Rng& rng, int max_deg) {
  std::vector<GaussianRational> c;
  const int deg = std::uniform_int_distribution<int>(0, max_deg)(rng);
  for (int k = 0; k <= deg; ++k)
    c.emplace_back(Rational(std::uniform_int_distribution<int>(-3, 3)(rng)));
  return Polynomial(std::move(c));
}

PolyMatrix random_poly_matrix(testing::Rng& rng, std::size_t n, int max_deg) {
  PolyMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, max_deg);
  return m;
}

// Product of elementary column operations: unimodular by construction.
PolyMatrix random_unimodular(testing::Rng& rng, std::size_t n) {
  PolyMatrix u = PolyMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < 6; ++k) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    PolyMatrix e = PolyMatrix::identity(n);
    e(i, j) = random_poly(rng, 2);
    u = u * e;
  }
  return u;
}

}  // namespace

TEST_CASE("Gaussian rationals parse and print canonically") {
  CHECK(GaussianRational::parse("3") == GaussianRational(3));
  CHECK(GaussianRational::parse("-1/2") == GaussianRational(Rational(-1, 2)));
  CHECK(GaussianRational::parse("0.25") == GaussianRational(Rational(1, 4)));
  CHECK(GaussianRational::parse("2i") == GaussianRational(0, 2));
  CHECK(GaussianRational::parse("-i") == GaussianRational(0, -1));
  CHECK(GaussianRational::parse("1/3-2/5i") == GaussianRational(Rational(1, 3), Rational(-2, 5)));
  for (const char* s : {"0", "-1/2", "3i", "1/3-2/5i", "7+i", "-i"})
    CHECK(GaussianRational::parse(s).to_string() == s);
  CHECK_THROWS_AS(GaussianRational::parse("1+"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("abc"), ParseError);
  CHECK(GaussianRational::from_double(0.1).real() != Rational(1, 10));
  const GaussianRational a(Rational(1, 2), Rational(3)), b(Rational(-2), Rational(1, 3));
  CHECK((a * b) / b == a);
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK_THROWS(GaussianRational().inverse());
}

TEST_CASE("polynomial arithmetic") {
  testing::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Polynomial a = random_poly(rng, 5), b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const Polynomial g = gcd(a * b, b);
    CHECK(g == b.monic());
  }
  const Polynomial p = Polynomial::linear(2) * Polynomial::linear(2) * Polynomial::linear(0);
  CHECK(p.valuation_at(2) == 2);
  CHECK(p.valuation_at(0) == 1);
  CHECK(p.valuation_at(1) == 0);
  CHECK(Polynomial().valuation_at(0) == -1);
}

TEST_CASE("determinant matches the Leibniz expansion") {
  testing::Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const PolyMatrix m = random_poly_matrix(rng, n, 2);
    CHECK(m.determinant() == oracle::leibniz_determinant(m));
  }
}

TEST_CASE("column Hermite form is canonical for the lattice") {
  testing::Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const PolyMatrix m = random_poly_matrix(rng, n, 2);
    if (m.determinant().is_zero()) continue;
    const PolyMatrix h = m.column_hermite_form();
    for (std::size_t r = 0; r < n; ++r) {
      CHECK(h(r, r).leading() == GaussianRational(1));
      for (std::size_t c = r + 1; c < n; ++c) CHECK(h(r, c).is_zero());
      for (std::size_t c = 0; c < r; ++c) CHECK(h(r, c).degree() < h(r, r).degree());
    }
    CHECK(h.determinant() == m.determinant().monic());
    CHECK((m * random_unimodular(rng, n)).column_hermite_form() == h);
    CHECK(h.column_hermite_form() == h);
  }
}

TEST_CASE("polynomial invariant factors agree with determinantal divisors") {
  testing::Rng rng(29);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    // Roots concentrated at 0 and 1 so the local types are interesting.
    PolyMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Polynomial p = std::uniform_int_distribution<int>(-2, 2)(rng);
        for (int k = std::uniform_int_distribution<int>(0, 2)(rng); k > 0; --k)
          p *= Polynomial::linear(std::uniform_int_distribution<int>(0, 1)(rng));
        m(r, c) = p;
      }
    if (m.determinant().is_zero()) continue;
    const auto inv = m.invariant_factors();
    for (int x = 0; x <= 1; ++x) {
      std::vector<int> exps;
      for (const auto& f : inv) exps.push_back(f.valuation_at(x));
      CHECK(exps == oracle::local_type_by_minors(m, x));
    }
    for (std::size_t k = 1; k < inv.size(); ++k) CHECK(inv[k].divisible_by(inv[k - 1]));
  }
}

TEST_CASE("constant matrices: rank, kernel, inverse") {
  ConstMatrix a(3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
  a(2, 0) = 0; a(2, 1) = 1; a(2, 2) = GaussianRational::i();
  CHECK(a.rank() == 2);
  const auto ker = a.kernel();
  REQUIRE(ker.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    GaussianRational s;
    for (std::size_t c = 0; c < 3; ++c) s += a(r, c) * ker[0][c];
    CHECK(s.is_zero());
  }
  CHECK_THROWS(a.inverse());
  a(1, 1) = 5;
  ConstMatrix inv = a.inverse();
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      GaussianRational s;
      for (std::size_t k = 0; k < 3; ++k) s += a(r, k) * inv(k, c);
      CHECK(s == GaussianRational(r == c ? 1 : 0));
    }
}

TEST_CASE("integer Smith form agrees with gcds of minors") {
  testing::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::uniform_int_distribution<int>(-9, 9)(rng);
    CHECK(smith_diagonal(m) == oracle::smith_by_minors(m));
  }
  IntMatrix z(2, 3);
  CHECK(smith_diagonal(z).empty());
  IntMatrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = -1; a(1, 1) = 3;
  CHECK(smith_diagonal(a) == std::vector<BigInt>{1, 6});
}
