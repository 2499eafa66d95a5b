#pragma once

#include <string_view>

#include <json.hpp>

#include "vml/fundamental_group.hpp"
#include "vml/hecke.hpp"
#include "vml/strata.hpp"

namespace vml {

/// Parses JSON text; syntax errors become ParseError with 1-based line and
/// column of the offending byte.
nlohmann::json parse_json_text(std::string_view text);

/// Scalars may be JSON integers, JSON floats (taken exactly) or strings in
/// the GaussianRational::parse syntax.
GaussianRational scalar_from_json(const nlohmann::json& j);

/// {"groups": [{"point": "a+bi", "hyperplanes": [[c_0, ..., c_{n-1}], ...]}]}
TowerDatum datum_from_json(const nlohmann::json& j, std::size_t n);
nlohmann::json to_json(const TowerDatum& datum);

/// Coefficient lists (lowest degree first) as canonical strings.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const ExactDivisor& d);

/// {"num_generators": k, "relators": [[1, 2, -1, -2], ...]}
GroupPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupPresentation& p);
nlohmann::json to_json(const AbelianInvariants& a);
nlohmann::json to_json(const FibrationCertificate& c);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const StratumInfo& s);

}  // namespace vml
