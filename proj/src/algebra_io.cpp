#include "vml/algebra_io.hpp"

#include <string>

#include "vml/error.hpp"

namespace vml {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw ParseError("schema: " + what, 0, 0);
}

json big_to_json(const BigInt& x) {
  // Exact: small values stay numbers, larger ones become decimal strings.
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, column);
  }
}

GaussianRational scalar_from_json(const json& j) {
  if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(j.get<long long>());
  if (j.is_number_float()) return GaussianRational::from_double(j.get<double>());
  schema_error("expected a number or a string scalar, got " + j.dump());
}

TowerDatum datum_from_json(const json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("groups") || !j["groups"].is_array())
    schema_error("datum needs a 'groups' array");
  TowerDatum datum;
  for (const auto& g : j["groups"]) {
    if (!g.is_object() || !g.contains("point") || !g.contains("hyperplanes") ||
        !g["hyperplanes"].is_array())
      schema_error("each group needs 'point' and a 'hyperplanes' array");
    TowerGroup group{scalar_from_json(g["point"]), {}};
    for (const auto& h : g["hyperplanes"]) {
      if (!h.is_array()) schema_error("hyperplane must be an array of scalars");
      std::vector<GaussianRational> c;
      for (const auto& x : h) c.push_back(scalar_from_json(x));
      group.hyperplanes.emplace_back(std::move(c));
    }
    datum.groups.push_back(std::move(group));
  }
  datum.validate(n);
  return datum;
}

json to_json(const TowerDatum& datum) {
  json groups = json::array();
  for (const auto& g : datum.groups) {
    json hs = json::array();
    for (const auto& h : g.hyperplanes) {
      json c = json::array();
      for (const auto& x : h.covector()) c.push_back(x.to_string());
      hs.push_back(std::move(c));
    }
    groups.push_back({{"point", g.point.to_string()}, {"hyperplanes", std::move(hs)}});
  }
  return {{"groups", std::move(groups)}};
}

json to_json(const Polynomial& p) {
  json c = json::array();
  for (const auto& x : p.coefficients()) c.push_back(x.to_string());
  return c;
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ExactDivisor& d) {
  json out = json::array();
  for (const auto& e : d.entries())
    out.push_back({{"point", e.position.to_string()}, {"multiplicity", e.multiplicity}});
  return out;
}

GroupPresentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num_generators") || !j["num_generators"].is_number_integer())
    schema_error("presentation needs an integer 'num_generators'");
  std::vector<Word> relators;
  if (j.contains("relators")) {
    if (!j["relators"].is_array()) schema_error("'relators' must be an array");
    for (const auto& r : j["relators"]) {
      if (!r.is_array()) schema_error("relator must be an array of signed generator indices");
      Word w;
      for (const auto& x : r) {
        if (!x.is_number_integer()) schema_error("relator letters must be integers");
        w.push_back(x.get<int>());
      }
      relators.push_back(std::move(w));
    }
  }
  return GroupPresentation::make(j["num_generators"].get<int>(), std::move(relators));
}

json to_json(const GroupPresentation& p) {
  return {{"num_generators", p.num_generators}, {"relators", p.relators}};
}

json to_json(const AbelianInvariants& a) {
  json torsion = json::array();
  for (const auto& t : a.torsion) torsion.push_back(big_to_json(t));
  return {{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}};
}

json to_json(const FibrationCertificate& c) {
  return {{"surjectivity", c.surjectivity}, {"injectivity", c.injectivity}, {"fiber", c.fiber}};
}

json to_json(const Partition& p) { return p.parts; }

json to_json(const StratumInfo& s) {
  return {{"partition", to_json(s.partition)}, {"num_points", s.num_points},
          {"base_dim", s.base_dim},            {"fiber_dim", s.fiber_dim},
          {"total_dim", s.total_dim},          {"codim", s.codim}};
}

}  // namespace vml
