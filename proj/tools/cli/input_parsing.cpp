#include "input_parsing.hpp"

#include <charconv>
#include <string>

#include "vml/error.hpp"

namespace vml::cli {

namespace {

double parse_real(std::string_view s, std::size_t column) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected a real number, got '" + std::string(s) + "'", 1, column);
  return v;
}

// Coefficient of an imaginary term with the 'i' already located.
double parse_imag(std::string_view term, std::size_t column) {
  std::string s(term);
  const auto pos = s.find('i');
  s.erase(pos, 1);
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, column);
}

}  // namespace

Complex parse_complex(std::string_view text, std::size_t offset) {
  const std::size_t col = offset + 1;
  if (text.empty()) throw ParseError("empty complex number", 1, col);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (text.find('i') != std::string_view::npos) return {0.0, parse_imag(text, col)};
    return {parse_real(text, col), 0.0};
  }
  const auto re = text.substr(0, split), im = text.substr(split);
  if (im.find('i') == std::string_view::npos)
    throw ParseError("imaginary part needs an 'i'", 1, offset + split + 1);
  return {parse_real(re, col), parse_imag(im, offset + split + 1)};
}

EffectiveDivisor parse_points(std::string_view text) {
  EffectiveDivisor div;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto item = text.substr(start, end - start);
    if (item.empty()) throw ParseError("empty point entry", 1, start + 1);
    const auto colon = item.find(':');
    const Complex z = parse_complex(item.substr(0, colon), start);
    int m = 1;
    if (colon != std::string_view::npos) {
      const auto ms = item.substr(colon + 1);
      const auto [ptr, ec] = std::from_chars(ms.data(), ms.data() + ms.size(), m);
      if (ms.empty() || ec != std::errc() || ptr != ms.data() + ms.size() || m < 1)
        throw ParseError("multiplicity must be a positive integer", 1, start + colon + 2);
    }
    div.add(z, m);
    start = end + 1;
  }
  return div;
}

FlatTorus parse_torus(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return FlatTorus::square(parse_real(text, 1));
  return FlatTorus::rectangle(parse_real(text.substr(0, comma), 1),
                              parse_real(text.substr(comma + 1), comma + 2));
}

}  // namespace vml::cli
