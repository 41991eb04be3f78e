#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spinnet {

using Integer = mpz_class;

/// Exact rational scalar. Arithmetic results are canonical; a value built
/// from a numerator and denominator needs canonicalize() before comparison.
using Rational = mpq_class;

/// "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace spinnet
