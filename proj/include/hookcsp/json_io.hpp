#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hookcsp/bijection.hpp"
#include "hookcsp/csp.hpp"
#include "hookcsp/polynomial.hpp"
#include "hookcsp/tableau.hpp"

namespace hookcsp {

using Json = nlohmann::json;

// {"alphabet": k, "rows": [[...], ...]}
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

// {"coeffs": [c0, c1, ...]}
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

// {"lo": lo, "hi": hi, "elements": [...]}
Json to_json(const Multiset& s);
Multiset multiset_from_json(const Json& j);

Json to_json(const CspReport& r);

/// Parses "6,4,4,7,5,6". Throws DomainError on anything else.
std::vector<int> parse_int_list(const std::string& text);

/// Aligned text table: d, |X^{g^d}|, f(w^d), match.
std::string format_csp_table(const CspReport& r);

}  // namespace hookcsp
