#pragma once

#include <cstddef>
#include <vector>

#include "hookcsp/partition.hpp"
#include "hookcsp/tableau.hpp"

namespace hookcsp {

/// SSYT(shape, content) with alphabet size content.length().
struct SsytFamily {
  Partition shape;
  Composition content;

  int alphabet() const { return static_cast<int>(content.length()); }
  /// False when the cell count and the content weight differ.
  bool weights_match() const { return shape.weight() == content.weight(); }
};

/// Every SSYT of the family, ordered lexicographically by reading word.
/// Backtracking over cells in reading order with content and row-capacity
/// pruning; an infeasible family yields an empty list.
std::vector<Tableau> enumerate_generic(const SsytFamily& family);

/// SSYT((m, n^b), content) built as the images of all beta-element
/// multisets of {2, ..., b+2} under the inverse free-entry map, ordered
/// lexicographically by multiset. Empty when beta < 0.
///
/// Throws DomainError when content does not have length b+2 or does not sum
/// to m + n*b.
std::vector<Tableau> enumerate_hook_arm(const HookArmShape& shape, const Composition& content);

/// Every composition of `total` into `parts` parts (zeros allowed unless
/// `positive_only`), in lexicographic order.
std::vector<Composition> compositions(int total, int parts, bool positive_only);

}  // namespace hookcsp
