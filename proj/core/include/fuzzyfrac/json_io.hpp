#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fuzzyfrac/fuzzy_number.hpp"

namespace fuzzyfrac {

/// Accepted encodings:
///   {"trapezoid": [a, b, c, d]}
///   {"triangular": [a, b, c]}
///   {"grid": [alpha...], "lower": [...], "upper": [...]}   ("grid" optional)
///   a bare number (promoted to a crisp fuzzy number)
/// Shape encodings are built on `grid`. Throws ParseError on malformed
/// input and ValidationError when the cuts do not stack.
FuzzyNumber parse_fuzzy(std::string_view json_text, const AlphaGrid& grid = AlphaGrid::uniform());

/// Trapezoid parameters when every level matches the linear shape to
/// 1e-12 (1 + max |endpoint|).
std::optional<std::array<double, 4>> trapezoid_shape(const FuzzyNumber& u);

/// {"grid", "lower", "upper"} plus "triangular" or "trapezoid" when the
/// shape is exact. Shortest round-trip decimal representation.
std::string emit_fuzzy(const FuzzyNumber& u);

}  // namespace fuzzyfrac
