#include "hookcsp/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hookcsp/error.hpp"

namespace hookcsp {

Tableau::Tableau(Rows rows, int alphabet) : rows_(std::move(rows)), alphabet_(alphabet) {
  if (alphabet_ < 1) throw DomainError("tableau alphabet must be at least 1");
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw MalformedShape("empty row " + std::to_string(r + 1) + " above a nonempty row");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size())
      throw MalformedShape("row " + std::to_string(r + 1) + " is longer than the row above it");
  }
}

std::size_t Tableau::cell_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

Partition Tableau::shape() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& row : rows_) p.push_back(static_cast<int>(row.size()));
  return Partition(std::move(p));
}

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
  if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) return c;
  if (auto c = a.shape().parts() <=> b.shape().parts(); c != 0) return c;
  return reading_word(a) <=> reading_word(b);
}

bool validate_ssyt(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1 || v > t.alphabet()) return false;
      if (c > 0 && rows[r][c - 1] > v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

void require_ssyt(const Tableau& t) {
  if (!validate_ssyt(t)) throw DomainError("tableau is not semistandard over its alphabet");
}

Composition content(const Tableau& t) {
  std::vector<int> mu(static_cast<std::size_t>(t.alphabet()), 0);
  for (const auto& row : t.rows())
    for (int v : row) {
      if (v < 1 || v > t.alphabet()) throw DomainError("entry outside the alphabet");
      ++mu[static_cast<std::size_t>(v - 1)];
    }
  return Composition(std::move(mu));
}

Word reading_word(const Tableau& t) {
  Word w;
  w.reserve(t.cell_count());
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

}  // namespace hookcsp
