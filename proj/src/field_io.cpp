#include "vml/field_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vml/error.hpp"

namespace vml {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view text, std::size_t line, std::size_t column) {
  // from_chars rejects a leading '+'.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected a number, got '" + std::string(text) + "'", line, column);
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Finds "key=" in a header line and returns the text up to the next space.
std::string_view header_value(std::string_view line, std::string_view key,
                              std::size_t line_no) {
  const std::string needle = std::string(key) + "=";
  const auto pos = line.find(needle);
  if (pos == std::string_view::npos) {
    throw ParseError("missing '" + needle + "' in header", line_no, 1);
  }
  auto rest = line.substr(pos + needle.size());
  return rest.substr(0, rest.find(' '));
}

Complex parse_pair(std::string_view text, std::size_t line_no) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("expected '<re>,<im>'", line_no, 1);
  return {parse_double(text.substr(0, comma), line_no, 1),
          parse_double(text.substr(comma + 1), line_no, 1)};
}

}  // namespace

void write_csv(std::ostream& out, const ScalarField& field) {
  const auto& t = field.torus();
  out << "# torus period1=" << fmt17(t.period1().real()) << ','
      << fmt17(t.period1().imag()) << " period2=" << fmt17(t.period2().real())
      << ',' << fmt17(t.period2().imag()) << '\n';
  out << "# grid n1=" << field.grid().n1 << " n2=" << field.grid().n2 << '\n';
  for (int i = 0; i < field.grid().n1; ++i) {
    for (int j = 0; j < field.grid().n2; ++j) {
      if (j) out << ',';
      out << fmt17(field(i, j));
    }
    out << '\n';
  }
}

ScalarField read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  };

  if (!next_line() || line.rfind("# torus", 0) != 0)
    throw ParseError("expected '# torus' header", line_no + 1, 1);
  const Complex p1 = parse_pair(header_value(line, "period1", line_no), line_no);
  const Complex p2 = parse_pair(header_value(line, "period2", line_no), line_no);

  if (!next_line() || line.rfind("# grid", 0) != 0)
    throw ParseError("expected '# grid' header", line_no + 1, 1);
  const int n1 = int(parse_double(header_value(line, "n1", line_no), line_no, 1));
  const int n2 = int(parse_double(header_value(line, "n2", line_no), line_no, 1));

  FlatTorus torus(p1, p2);
  Grid grid(n1, n2);
  std::vector<double> values;
  values.reserve(grid.size());
  for (int i = 0; i < n1; ++i) {
    if (!next_line()) throw ParseError("unexpected end of data", line_no + 1, 1);
    std::string_view row(line);
    std::size_t column = 1;
    int count = 0;
    while (true) {
      const auto comma = row.find(',');
      const auto cell = trim(row.substr(0, comma));
      values.push_back(parse_double(cell, line_no, column));
      ++count;
      if (comma == std::string_view::npos) break;
      column += comma + 1;
      row.remove_prefix(comma + 1);
    }
    if (count != n2) {
      throw ParseError("expected " + std::to_string(n2) + " values, got " +
                           std::to_string(count),
                       line_no, 1);
    }
  }
  return ScalarField(torus, grid, std::move(values));
}

nlohmann::json to_json(const FlatTorus& torus) {
  return {{"period1", {torus.period1().real(), torus.period1().imag()}},
          {"period2", {torus.period2().real(), torus.period2().imag()}},
          {"volume", torus.volume()}};
}

nlohmann::json to_json(const Grid& grid) { return {{"n1", grid.n1}, {"n2", grid.n2}}; }

nlohmann::json to_json(const ScalarField& field) {
  nlohmann::json values = nlohmann::json::array();
  for (double v : field.values()) values.push_back(v);
  return {{"torus", to_json(field.torus())},
          {"grid", to_json(field.grid())},
          {"values", std::move(values)}};
}

ScalarField field_from_json(const nlohmann::json& j) {
  try {
    const auto& t = j.at("torus");
    const FlatTorus torus({t.at("period1").at(0).get<double>(), t.at("period1").at(1).get<double>()},
                          {t.at("period2").at(0).get<double>(), t.at("period2").at(1).get<double>()});
    const Grid grid(j.at("grid").at("n1").get<int>(), j.at("grid").at("n2").get<int>());
    return ScalarField(torus, grid, j.at("values").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed field envelope: ") + e.what(), 0, 0);
  }
}

}  // namespace vml
