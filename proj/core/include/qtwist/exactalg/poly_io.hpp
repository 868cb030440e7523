#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "qtwist/exactalg/rat_func.hpp"

namespace qtwist::exactalg {

/// {"vars": [...], "terms": [{"c": "<int>", "e": [...]}, ...]}.  `vars`
/// lists the variables that occur, in the fixed variable order; terms run
/// from the leading monomial down, matching the text form.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

/// {"num": <poly>, "den": <poly>}
nlohmann::json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

/// Parses the text form produced by LaurentPoly::to_string, e.g.
/// `-2*s^3*l^-1 + m^6 - 7`.  Exponents may be written `x^-2` or `x^(-2)`,
/// and repeated factors multiply.  Throws ParseError with a 1-based column.
LaurentPoly parse_poly(std::string_view text);

}  // namespace qtwist::exactalg
