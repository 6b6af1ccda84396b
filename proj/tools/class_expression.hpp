#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "algebra_file.hpp"
#include "nilcoh/cohomology.hpp"
#include "nilcoh/exterior.hpp"

namespace nilcoh::cli {

/// expr := ['+'|'-'] term (('+'|'-') term)*
/// term := [rational '*'] monomial
/// monomial := 'e'INT ('^' 'e'INT)*
/// Indices are 1-based and at most `dim`. All terms must have the same
/// degree. Throws ParseError with the offending position.
ExteriorElement parse_class_expression(std::string_view text, std::size_t dim);

/// "e1^e4", "1" for the empty monomial.
std::string render_monomial(Monomial m);

/// "e1^e4 + e2^e3", "2*e1^e2", "-1/2*e3", "0".
std::string render_element(const ExteriorElement& u);

/// In the representative basis: "2·[e1^e2^e3^e4]", "[e1^e4] + [e2^e3]", "0".
std::string render_class(const CohomologyRing& ring, const CohClass& c);

}  // namespace nilcoh::cli
