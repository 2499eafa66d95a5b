#include "vml/polynomial.hpp"

#include "vml/error.hpp"

namespace vml {

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<GaussianRational> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::linear(const GaussianRational& root) {
  return Polynomial(std::vector<GaussianRational>{-root, GaussianRational(1)});
}

Polynomial Polynomial::monomial(int k, GaussianRational coefficient) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(k) + 1);
  c.back() = std::move(coefficient);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussianRational& Polynomial::leading() const {
  if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return c_.back();
}

GaussianRational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return {};
  return c_[static_cast<std::size_t>(k)];
}

GaussianRational Polynomial::operator()(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  std::vector<GaussianRational> rem = c_;
  std::vector<GaussianRational> quot(c_.size() - divisor.c_.size() + 1);
  const GaussianRational lead_inv = divisor.leading().inverse();
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const GaussianRational q = rem[k + dd] * lead_inv;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
    quot[k] = q;
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return q;
}

bool Polynomial::divisible_by(const Polynomial& divisor) const {
  return divmod(divisor).second.is_zero();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const GaussianRational inv = leading().inverse();
  Polynomial out = *this;
  for (auto& c : out.c_) c *= inv;
  return out;
}

int Polynomial::valuation_at(const GaussianRational& x) const {
  if (is_zero()) return -1;
  // Synthetic division by (z - x) until the remainder is nonzero.
  std::vector<GaussianRational> cur = c_;
  int k = 0;
  while (cur.size() > 1) {
    std::vector<GaussianRational> next(cur.size() - 1);
    GaussianRational acc;
    for (std::size_t j = cur.size(); j-- > 1;) {
      acc = acc * x + cur[j];
      next[j - 1] = acc;
    }
    const GaussianRational remainder = acc * x + cur[0];
    if (!remainder.is_zero()) break;
    cur = std::move(next);
    ++k;
  }
  return k;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string coef = c_[k].to_string();
    const bool compound = coef.find_first_of("+-", 1) != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    if (!out.empty()) out += coef.front() == '-' ? " - " : " + ";
    if (!out.empty() && coef.front() == '-') coef.erase(0, 1);
    if (k == 0) {
      out += coef;
      continue;
    }
    if (coef == "1") coef.clear();
    else if (coef == "-1") coef = "-";
    out += coef + (k == 1 ? "z" : "z^" + std::to_string(k));
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace vml
