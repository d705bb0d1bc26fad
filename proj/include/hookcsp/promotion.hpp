#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hookcsp/enumeration.hpp"
#include "hookcsp/tableau.hpp"

namespace hookcsp {

/// Jeu-de-taquin promotion.
///
/// Every entry equal to k becomes a dot. While some dot lies outside the
/// top-left-justified block of dots, the westernmost such dot (northernmost
/// on ties) slides north or west: with only one non-dot neighbour among
/// {above, left} it swaps with that one; with both it swaps with the
/// neighbour above when left <= above, otherwise with the left one. Dots are
/// finally relabelled 1 and every other entry is incremented.
///
/// The content (mu_1, ..., mu_k) becomes (mu_k, mu_1, ..., mu_{k-1}).
/// Throws DomainError if t is not semistandard.
Tableau promote(const Tableau& t);

/// promote applied j times; j == 0 returns t.
Tableau promote_power(const Tableau& t, std::size_t j);

inline constexpr std::size_t kDefaultOrbitBound = 1'000'000;

/// Cycle of a tableau under promote^step.
struct PromotionOrbit {
  Tableau base;
  std::size_t step;
  /// members[0] == base and promote^step(members[i]) == members[i+1 mod order].
  std::vector<Tableau> members;

  std::size_t order() const { return members.size(); }
};

/// Throws std::runtime_error when the cycle is longer than `bound`, and
/// DomainError when step == 0.
PromotionOrbit orbit(const Tableau& t, std::size_t step, std::size_t bound = kDefaultOrbitBound);

/// Least r >= 1 with promote^(step*r) fixing every member: the lcm of the
/// orbit orders. Throws DomainError on an empty family.
std::size_t promotion_order_on_family(std::span<const Tableau> members, std::size_t step);
std::size_t promotion_order_on_family(const SsytFamily& family, std::size_t step);

/// Sizes of the orbits of promote^step on a family that it preserves, in the
/// order their smallest-index member appears.
std::vector<std::size_t> orbit_sizes(std::span<const Tableau> members, std::size_t step);

}  // namespace hookcsp
