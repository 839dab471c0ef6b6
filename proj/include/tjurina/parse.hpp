#pragma once

#include <optional>
#include <string>

#include "tjurina/polynomial.hpp"

namespace tjurina {

// Parses a signed sum of terms "coef * x0^e0 * x1^e1 ...", coefficient an
// integer or rational p/q, with "*" and "^1" optional; variables x0..x9.
// Number of variables defaults to 1 + max index used; n_vars_override may
// widen it. Throws ParseError (with position) or NotHomogeneous (with the
// per-term degrees).
HomogeneousPoly parse_poly(const std::string& text, std::optional<int> n_vars_override = std::nullopt);

// Canonical rendering; parse_poly(render(f)) == f for nonzero f.
std::string render(const HomogeneousPoly& f);

// "a,b,c" with exact rational coordinates.
std::vector<Rat> parse_point(const std::string& text);

}  // namespace tjurina
