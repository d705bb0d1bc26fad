#include "hookcsp/json_io.hpp"

#include <iomanip>
#include <sstream>

#include "hookcsp/error.hpp"

namespace hookcsp {

Json to_json(const Tableau& t) { return Json{{"alphabet", t.alphabet()}, {"rows", t.rows()}}; }

Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("rows"))
    throw DomainError(R"(tableau JSON needs "alphabet" and "rows")");
  if (!j.at("alphabet").is_number_integer()) throw DomainError("tableau alphabet must be an integer");
  const Json& rows = j.at("rows");
  if (!rows.is_array()) throw DomainError("tableau rows must be an array of arrays");
  Tableau::Rows out;
  for (const Json& row : rows) {
    if (!row.is_array()) throw DomainError("tableau rows must be an array of arrays");
    auto& r = out.emplace_back();
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw DomainError("tableau entries must be integers");
      r.push_back(v.get<int>());
    }
  }
  return Tableau(std::move(out), j.at("alphabet").get<int>());
}

Json to_json(const IntPolynomial& p) { return Json{{"coeffs", p.coeffs()}}; }

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
    throw DomainError(R"(polynomial JSON needs a "coeffs" array)");
  return IntPolynomial(j.at("coeffs").get<std::vector<IntPolynomial::Coeff>>());
}

Json to_json(const Multiset& s) { return Json{{"lo", s.lo()}, {"hi", s.hi()}, {"elements", s.elements()}}; }

Multiset multiset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi") || !j.contains("elements"))
    throw DomainError(R"(multiset JSON needs "lo", "hi" and "elements")");
  return Multiset(j.at("lo").get<int>(), j.at("hi").get<int>(), j.at("elements").get<std::vector<int>>());
}

Json to_json(const CspReport& r) {
  Json per = Json::array();
  for (const auto& rec : r.per_exponent) {
    per.push_back({{"d", rec.d},
                   {"fixed_count", rec.fixed_count},
                   {"f_at_omega_d", rec.f_at_omega_d ? Json(*rec.f_at_omega_d) : Json(nullptr)},
                   {"oracle_count", rec.oracle_count},
                   {"match", rec.match}});
  }
  return Json{{"m", r.shape.m()},
              {"n", r.shape.n()},
              {"b", r.shape.b()},
              {"mu", r.content.parts()},
              {"beta", r.beta},
              {"group_order", r.group_order},
              {"family_size", r.family_size},
              {"polynomial", to_json(r.polynomial)},
              {"per_exponent", std::move(per)},
              {"orbit_sizes", r.orbit_sizes},
              {"orbit_congruence", r.orbit_congruence},
              {"verdict", r.verdict}};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw DomainError("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

std::string format_csp_table(const CspReport& r) {
  std::ostringstream os;
  os << "lambda=(" << r.shape.m() << "," << r.shape.n() << "^" << r.shape.b() << ") mu=("
     << to_string(r.content.parts()) << ") beta=" << r.beta << " f(q)=" << r.polynomial.to_string() << "\n";
  os << std::setw(4) << "d" << std::setw(12) << "|X^{g^d}|" << std::setw(10) << "f(w^d)" << std::setw(8) << "match"
     << "\n";
  for (const auto& rec : r.per_exponent) {
    os << std::setw(4) << rec.d << std::setw(12) << rec.fixed_count << std::setw(10)
       << (rec.f_at_omega_d ? std::to_string(*rec.f_at_omega_d) : std::string("n/a")) << std::setw(8)
       << (rec.match ? "yes" : "NO") << "\n";
  }
  os << "orbit sizes: " << to_string(std::vector<int>(r.orbit_sizes.begin(), r.orbit_sizes.end()))
     << "  verdict: " << (r.verdict ? "CSP holds" : "CSP FAILS") << "\n";
  return os.str();
}

}  // namespace hookcsp
