#pragma once

#include <iosfwd>

#include <json.hpp>

#include "vml/torus.hpp"

namespace vml {

// CSV layout:
//   # torus period1=<re>,<im> period2=<re>,<im>
//   # grid n1=<n1> n2=<n2>
//   then n1 rows of n2 comma-separated samples (row i = index along period1).
void write_csv(std::ostream& out, const ScalarField& field);
ScalarField read_csv(std::istream& in);

/// {"torus": {"period1": [re, im], "period2": [re, im], "volume": V},
///  "grid": {"n1": .., "n2": ..}, "values": [row-major samples]}
nlohmann::json to_json(const ScalarField& field);
ScalarField field_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FlatTorus& torus);
nlohmann::json to_json(const Grid& grid);

}  // namespace vml
