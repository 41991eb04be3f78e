#pragma once

#include "spinnet/poly3.hpp"

#include <string_view>

namespace spinnet {

/// Parses a polynomial literal in x, y, z.
///
/// Accepts integers, `+ - * ^`, parentheses, implicit multiplication
/// ("2xy", "x(y+1)") and division by a nonzero constant ("2/3 x", "(x+y)/2").
/// Throws DomainError on anything else.
Poly3 parse_poly(std::string_view text);

}  // namespace spinnet
