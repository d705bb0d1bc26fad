#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hookcsp/partition.hpp"
#include "hookcsp/polynomial.hpp"
#include "hookcsp/tableau.hpp"

namespace hookcsp {

/// p(w^d) for w a primitive N-th root of unity, computed in Z[q]/Phi_e with
/// e = N / gcd(d, N). Returns nullopt when the value is not an integer.
/// Throws DomainError when N < 1.
std::optional<std::int64_t> eval_at_root_of_unity(const IntPolynomial& p, int order, int d);

/// Members T of a (m, n^b) family with promote^((b+2)d)(T) == T, counted by
/// iterating promotion.
std::size_t count_fixed_points(std::span<const Tableau> family, int b, int d);
std::size_t count_fixed_points(const HookArmShape& shape, const Composition& content, int d);

/// k-element multisets of {1..N} fixed by the value rotation theta^d,
/// counted by brute force.
std::size_t multiset_fixed_oracle(int order, int k, int d);

struct CspExponentRecord {
  int d = 0;
  std::size_t fixed_count = 0;
  /// nullopt when f(w^d) is not an integer.
  std::optional<std::int64_t> f_at_omega_d;
  std::size_t oracle_count = 0;
  bool match = false;
};

struct CspReport {
  HookArmShape shape{1, 1, 1};
  Composition content;
  int beta = 0;
  int group_order = 0;
  IntPolynomial polynomial;
  std::vector<CspExponentRecord> per_exponent;
  /// Sorted ascending.
  std::vector<std::size_t> orbit_sizes;
  std::size_t family_size = 0;
  bool orbit_congruence = false;
  bool verdict = false;
};

/// Checks (SSYT((m,n^b), mu), <promote^(b+2)>, [b+beta choose beta]_q).
///
/// For every d in 0..b the fixed points are counted directly and compared
/// with f(w^d); the orbit generating function is compared with f modulo
/// q^(b+1) - 1. The multiset oracle must agree with f(w^d), and the fixed
/// counts must agree with the orbit sizes; a disagreement on either is an
/// InconsistencyError. Throws InfeasibleFamily when beta < 0.
CspReport verify_csp(const HookArmShape& shape, const Composition& content);

/// Modified Kostka-Foulkes polynomial == q^(n*C(b+1,2)) [b+beta choose beta]_q.
/// Throws InfeasibleFamily when beta < 0.
bool verify_kostka_link(const HookArmShape& shape, const Composition& content);

}  // namespace hookcsp
