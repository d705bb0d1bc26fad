#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hookcsp/partition.hpp"

namespace hookcsp {

using Word = std::vector<int>;

/// A filling of a Young diagram by letters of the alphabet {1, ..., k}.
///
/// Construction only checks that the rows are left-justified with weakly
/// decreasing lengths and that k >= 1; semistandardness is a separate
/// predicate (validate_ssyt) so that invalid fillings can be represented
/// and rejected with a precise answer. Empty trailing rows are dropped.
class Tableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  Tableau(Rows rows, int alphabet);
  Tableau(std::initializer_list<std::vector<int>> rows, int alphabet)
      : Tableau(Rows(rows), alphabet) {}

  const Rows& rows() const { return rows_; }
  int alphabet() const { return alphabet_; }
  std::size_t row_count() const { return rows_.size(); }
  int at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  std::size_t cell_count() const;
  Partition shape() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  /// Orders by alphabet, then by reading word.
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

 private:
  Rows rows_;
  int alphabet_;
};

/// Rows weakly increase, columns strictly increase, entries lie in [1, k].
bool validate_ssyt(const Tableau& t);

/// Throws DomainError when validate_ssyt(t) is false.
void require_ssyt(const Tableau& t);

/// Length-k vector counting each letter.
Composition content(const Tableau& t);

/// Rows read left to right, starting from the bottom row.
Word reading_word(const Tableau& t);

}  // namespace hookcsp
