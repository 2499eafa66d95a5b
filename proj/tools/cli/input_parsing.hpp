#pragma once

#include <string_view>

#include "vml/divisor.hpp"
#include "vml/torus.hpp"

namespace vml::cli {

/// "1.5", "-2i", "0.5+1.25i", "3-i". Errors report the column in `text`.
Complex parse_complex(std::string_view text, std::size_t column_offset = 0);

/// "x+iy:m,x+iy:m,..."; the multiplicity defaults to 1. Imaginary parts may
/// be written "iy" or "yi".
EffectiveDivisor parse_points(std::string_view text);

/// "L" (square) or "L1,L2" (rectangle with sides L1 and L2).
FlatTorus parse_torus(std::string_view text);

}  // namespace vml::cli
