#include "hookcsp/csp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hookcsp/bijection.hpp"
#include "hookcsp/enumeration.hpp"
#include "hookcsp/error.hpp"
#include "hookcsp/promotion.hpp"
#include "hookcsp/statistics.hpp"

namespace hookcsp {

std::optional<std::int64_t> eval_at_root_of_unity(const IntPolynomial& p, int order, int d) {
  if (order < 1) throw DomainError("root of unity order must be positive");
  d = ((d % order) + order) % order;
  const int g = std::gcd(d, order);
  const int e = order / g;
  const int t = d / g;
  // w^d is a primitive e-th root eta^t; fold exponents onto powers of eta.
  std::vector<IntPolynomial::Coeff> folded(static_cast<std::size_t>(e), 0);
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    folded[(k * static_cast<std::size_t>(t)) % static_cast<std::size_t>(e)] += c[k];
  const IntPolynomial rem = divide(IntPolynomial(std::move(folded)), cyclotomic(e)).remainder;
  if (rem.degree() > 0) return std::nullopt;
  return rem.coeff(0);
}

std::size_t count_fixed_points(std::span<const Tableau> family, int b, int d) {
  const auto step = static_cast<std::size_t>(b + 2) * static_cast<std::size_t>(d);
  return static_cast<std::size_t>(
      std::count_if(family.begin(), family.end(), [&](const Tableau& t) { return promote_power(t, step) == t; }));
}

std::size_t count_fixed_points(const HookArmShape& shape, const Composition& content, int d) {
  const auto family = enumerate_hook_arm(shape, content);
  return count_fixed_points(family, shape.b(), d);
}

std::size_t multiset_fixed_oracle(int order, int k, int d) {
  std::size_t fixed = 0;
  for (const Multiset& s : all_multisets(1, order, k))
    if (s.rotated(d) == s) ++fixed;
  return fixed;
}

CspReport verify_csp(const HookArmShape& shape, const Composition& content) {
  const FreeEntryProfile profile = beta_profile(shape, content);
  if (profile.beta < 0) throw InfeasibleFamily("beta(lambda, mu) < 0: the family is empty");

  CspReport report;
  report.shape = shape;
  report.content = content;
  report.beta = profile.beta;
  report.group_order = shape.b() + 1;
  report.polynomial = q_binomial(shape.b() + profile.beta, profile.beta);

  const auto family = enumerate_hook_arm(shape, content);
  report.family_size = family.size();
  const int order = report.group_order;

  report.orbit_sizes = orbit_sizes(family, static_cast<std::size_t>(shape.b() + 2));
  std::sort(report.orbit_sizes.begin(), report.orbit_sizes.end());

  bool all_match = true;
  for (int d = 0; d < order; ++d) {
    CspExponentRecord rec;
    rec.d = d;
    rec.fixed_count = count_fixed_points(family, shape.b(), d);
    rec.f_at_omega_d = eval_at_root_of_unity(report.polynomial, order, d);
    rec.oracle_count = multiset_fixed_oracle(order, profile.beta, d);

    if (!rec.f_at_omega_d || *rec.f_at_omega_d != static_cast<std::int64_t>(rec.oracle_count)) {
      std::ostringstream os;
      os << "multiset oracle (" << rec.oracle_count << ") disagrees with f(w^" << d << ")";
      throw InconsistencyError(os.str());
    }
    std::size_t from_orbits = 0;
    for (std::size_t s : report.orbit_sizes)
      if (d % static_cast<int>(s) == 0) from_orbits += s;
    if (from_orbits != rec.fixed_count) {
      std::ostringstream os;
      os << "direct fixed-point count (" << rec.fixed_count << ") disagrees with orbit sizes (" << from_orbits
         << ") at d=" << d;
      throw InconsistencyError(os.str());
    }

    rec.match = *rec.f_at_omega_d == static_cast<std::int64_t>(rec.fixed_count);
    all_match = all_match && rec.match;
    report.per_exponent.push_back(rec);
  }

  // Each orbit of size s contributes 1 + q^(N/s) + ... + q^((s-1)N/s).
  bool sizes_divide = true;
  IntPolynomial orbit_gf;
  for (std::size_t s : report.orbit_sizes) {
    if (order % static_cast<int>(s) != 0) {
      sizes_divide = false;
      continue;
    }
    const auto gap = static_cast<std::size_t>(order) / s;
    for (std::size_t i = 0; i < s; ++i) orbit_gf += IntPolynomial::monomial(i * gap);
  }
  report.orbit_congruence = sizes_divide && report.polynomial.mod_power_minus_one(static_cast<std::size_t>(order)) == orbit_gf;

  const auto at_one = static_cast<std::size_t>(report.polynomial.at_one());
  report.verdict = all_match && report.orbit_congruence && at_one == report.family_size;
  return report;
}

bool verify_kostka_link(const HookArmShape& shape, const Composition& content) {
  const FreeEntryProfile profile = beta_profile(shape, content);
  if (profile.beta < 0) throw InfeasibleFamily("beta(lambda, mu) < 0: the family is empty");
  const auto family = enumerate_hook_arm(shape, content.sorted_descending());
  const IntPolynomial modified = cocharge_generating_function(family);
  const int b = shape.b();
  const auto offset = static_cast<std::size_t>(shape.n() * (b + 1) * b / 2);
  return modified == q_binomial(b + profile.beta, profile.beta).shifted(offset);
}

}  // namespace hookcsp
