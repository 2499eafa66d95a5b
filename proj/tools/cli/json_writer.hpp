#pragma once

#include <string>

#include <json.hpp>

namespace vml::cli {

/// Canonical text: keys sorted, two-space indent, every double printed with
/// %.17g. Non-finite doubles become null. Ends with a newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace vml::cli
