#pragma once

#include "spinnet/central_expansion.hpp"
#include "spinnet/checks.hpp"
#include "spinnet/poly3.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace spinnet {

/// Bumped whenever a field of the JSON output changes meaning.
inline constexpr int json_schema_version = 1;

/// \tfrac12 for single digits, \tfrac{13}{9} otherwise; integers plain.
std::string latex(const Rational& q);
std::string latex(const Poly3& p);
std::string latex(const CentralExpansion& e);

nlohmann::json to_json(const Poly3& p);
nlohmann::json to_json(const CentralExpansion& e);
nlohmann::json to_json(const Check& c);
/// Inverse of to_json(Poly3), reading the structured terms.
Poly3 poly_from_json(const nlohmann::json& j);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

/// "112", "1,1,2" or "(1,1,2)". Throws DomainError.
AdmissibleTriple parse_triple(std::string_view text);

}  // namespace spinnet
