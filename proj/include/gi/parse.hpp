#pragma once

#include "gi/polynomial.hpp"

#include <string_view>

namespace gi {

/// Parses expressions like "x^2*y - 3/2 z + (x+y)^3" in `ring`.
/// Juxtaposition multiplies; '/' is allowed only by nonzero constants.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace gi
