#include "vml/gaussian_rational.hpp"

#include <cctype>
#include <cmath>

#include "vml/error.hpp"

namespace vml {

namespace {

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Unsigned rational literal: digits, digits/digits or digits.digits.
Rational parse_magnitude(std::string_view text, std::string_view whole,
                         std::size_t offset) {
  auto fail = [&](const std::string& why) -> Rational {
    throw ParseError("bad number '" + std::string(whole) + "': " + why, 1, offset + 1);
  };
  if (text.empty()) return fail("empty component");
  auto digits = [&](std::string_view d) {
    if (d.empty()) fail("missing digits");
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("unexpected character");
    return BigInt(std::string(d));
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt den = digits(text.substr(slash + 1));
    if (den == 0) return fail("zero denominator");
    return Rational(digits(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) scale *= 10;
    const BigInt ip = int_part.empty() ? BigInt(0) : digits(int_part);
    const BigInt fp = frac_part.empty() ? BigInt(0) : digits(frac_part);
    return Rational(ip * scale + fp, scale);
  }
  return Rational(digits(text));
}

std::string rational_text(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view input) {
  const std::string text = trim(input);
  if (text.empty()) throw ParseError("empty number", 1, 1);

  // Split into signed terms at '+'/'-' that are not leading.
  std::vector<std::pair<std::size_t, std::size_t>> terms;
  std::size_t start = 0;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (text[k] == '+' || text[k] == '-') {
      terms.emplace_back(start, k);
      start = k;
    }
  }
  terms.emplace_back(start, text.size());
  if (terms.size() > 2) throw ParseError("too many terms in '" + text + "'", 1, 1);

  GaussianRational out;
  bool seen_real = false, seen_imag = false;
  for (auto [b, e] : terms) {
    std::string_view term(text.data() + b, e - b);
    bool negative = false;
    std::size_t offset = b;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      negative = term.front() == '-';
      term.remove_prefix(1);
      ++offset;
    }
    const bool imaginary = !term.empty() && term.back() == 'i';
    if (imaginary) term.remove_suffix(1);
    if (!term.empty() && term.back() == '*') term.remove_suffix(1);
    Rational value = (imaginary && term.empty()) ? Rational(1)
                                                 : parse_magnitude(term, text, offset);
    if (negative) value = -value;
    if (imaginary) {
      if (seen_imag) throw ParseError("two imaginary parts in '" + text + "'", 1, offset + 1);
      seen_imag = true;
      out.im_ = value;
    } else {
      if (seen_real) throw ParseError("two real parts in '" + text + "'", 1, offset + 1);
      seen_real = true;
      out.re_ = value;
    }
  }
  return out;
}

GaussianRational GaussianRational::from_double(double re, double im) {
  auto exact = [](double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
    int exp = 0;
    const double mant = std::frexp(x, &exp);
    // 53-bit mantissa scaled to an integer.
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational q(scaled);
    exp -= 53;
    BigInt pow2 = 1;
    pow2 <<= std::abs(exp);
    return exp >= 0 ? q * Rational(pow2) : q / Rational(pow2);
  };
  return {exact(re), exact(im)};
}

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.im_.is_zero()) {
    if (o.re_.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return rational_text(re_);
  std::string im_text;
  if (im_ == 1) im_text = "i";
  else if (im_ == -1) im_text = "-i";
  else im_text = rational_text(im_) + "i";
  if (re_.is_zero()) return im_text;
  return rational_text(re_) + (im_ > 0 ? "+" : "") + im_text;
}

std::complex<double> GaussianRational::to_complex() const {
  return {static_cast<double>(re_), static_cast<double>(im_)};
}

}  // namespace vml
