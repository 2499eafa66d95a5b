#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vml/gaussian_rational.hpp"

namespace vml {

/// Univariate polynomial in z over Q(i); coefficients stored lowest degree
/// first with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(GaussianRational constant);  // NOLINT: constants embed implicitly
  Polynomial(long long constant) : Polynomial(GaussianRational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<GaussianRational> coefficients);

  /// z - root.
  static Polynomial linear(const GaussianRational& root);
  /// z^k.
  static Polynomial monomial(int k, GaussianRational coefficient = 1);

  const std::vector<GaussianRational>& coefficients() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const GaussianRational& leading() const;
  GaussianRational coefficient(int k) const;

  GaussianRational operator()(const GaussianRational& z) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Quotient of an exact division; throws if the remainder is nonzero.
  Polynomial exact_div(const Polynomial& divisor) const;
  bool divisible_by(const Polynomial& divisor) const;

  /// Scaled to leading coefficient 1 (zero stays zero).
  Polynomial monic() const;
  /// Largest k with (z - x)^k dividing *this; -1 for the zero polynomial.
  int valuation_at(const GaussianRational& x) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace vml
