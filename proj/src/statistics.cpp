#include "hookcsp/statistics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hookcsp/bijection.hpp"
#include "hookcsp/error.hpp"

namespace hookcsp {

namespace {

// Positions of 1..len in w; throws unless w is a permutation of 1..len.
std::vector<std::size_t> permutation_positions(std::span<const int> w) {
  const std::size_t len = w.size();
  std::vector<std::size_t> pos(len + 1, len);
  for (std::size_t i = 0; i < len; ++i) {
    const int v = w[i];
    if (v < 1 || static_cast<std::size_t>(v) > len || pos[static_cast<std::size_t>(v)] != len)
      throw DomainError("word is not a permutation of 1.." + std::to_string(len));
    pos[static_cast<std::size_t>(v)] = i;
  }
  return pos;
}

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

int cocharge_permutation(std::span<const int> w) {
  const auto pos = permutation_positions(w);
  int index = 0;
  int total = 0;
  for (std::size_t j = 2; j <= w.size(); ++j) {
    if (pos[j] < pos[j - 1]) ++index;
    total += index;
  }
  return total;
}

int charge_permutation(std::span<const int> w) {
  return choose2(static_cast<int>(w.size())) - cocharge_permutation(w);
}

SubwordDecomposition standard_subwords(std::span<const int> w) {
  int largest = 0;
  for (int v : w) {
    if (v < 1) throw DomainError("word letters must be positive");
    largest = std::max(largest, v);
  }
  std::vector<int> counts(static_cast<std::size_t>(largest) + 1, 0);
  for (int v : w) ++counts[static_cast<std::size_t>(v)];
  for (int v = 2; v <= largest; ++v)
    if (counts[static_cast<std::size_t>(v)] > counts[static_cast<std::size_t>(v - 1)])
      throw DomainError("word content is not a partition");

  SubwordDecomposition out;
  std::vector<bool> alive(w.size(), true);
  std::size_t left = w.size();
  while (left > 0) {
    int top = 0;
    while (top + 1 <= largest && counts[static_cast<std::size_t>(top + 1)] > 0) ++top;

    std::vector<std::size_t> picked;
    std::size_t cur = w.size();  // one past the end: the first search covers the whole word
    for (int j = 1; j <= top; ++j) {
      std::size_t found = w.size();
      for (std::size_t i = cur; i-- > 0;)
        if (alive[i] && w[i] == j) {
          found = i;
          break;
        }
      if (found == w.size())
        for (std::size_t i = w.size(); i-- > cur;)
          if (alive[i] && w[i] == j) {
            found = i;
            break;
          }
      if (found == w.size()) throw InconsistencyError("standard subword extraction ran out of letters");
      picked.push_back(found);
      cur = found;
    }
    std::sort(picked.begin(), picked.end());
    Word sub;
    for (std::size_t i : picked) {
      sub.push_back(w[i]);
      alive[i] = false;
      --counts[static_cast<std::size_t>(w[i])];
    }
    left -= picked.size();
    out.subwords.push_back(std::move(sub));
    out.positions.push_back(std::move(picked));
  }
  return out;
}

int cocharge_word(std::span<const int> w) {
  int total = 0;
  for (const Word& sub : standard_subwords(w).subwords) total += cocharge_permutation(sub);
  return total;
}

int charge_word(std::span<const int> w) {
  int total = 0;
  for (const Word& sub : standard_subwords(w).subwords) total += charge_permutation(sub);
  return total;
}

int cocharge_tableau(const Tableau& t) {
  if (!content(t).is_partition()) throw DomainError("cocharge of a tableau needs partition content");
  return cocharge_word(reading_word(t));
}

int charge_tableau(const Tableau& t) {
  if (!content(t).is_partition()) throw DomainError("charge of a tableau needs partition content");
  return charge_word(reading_word(t));
}

int kappa(const Composition& mu) {
  int k = 0;
  for (std::size_t i = 0; i < mu.length(); ++i) k += static_cast<int>(i) * mu[i];
  return k;
}

IntPolynomial charge_generating_function(std::span<const Tableau> tableaux) {
  std::vector<IntPolynomial::Coeff> coeffs;
  for (const Tableau& t : tableaux) {
    const auto e = static_cast<std::size_t>(charge_tableau(t));
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    ++coeffs[e];
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial cocharge_generating_function(std::span<const Tableau> tableaux) {
  std::vector<IntPolynomial::Coeff> coeffs;
  for (const Tableau& t : tableaux) {
    const auto e = static_cast<std::size_t>(cocharge_tableau(t));
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    ++coeffs[e];
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial kostka_foulkes(const SsytFamily& family) {
  const SsytFamily sorted{family.shape, family.content.sorted_descending()};
  return charge_generating_function(enumerate_generic(sorted));
}

IntPolynomial modified_kostka_foulkes(const SsytFamily& family) {
  const SsytFamily sorted{family.shape, family.content.sorted_descending()};
  return cocharge_generating_function(enumerate_generic(sorted));
}

int PlanePartitionRow::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

PlanePartitionRow plane_partition_of(const Tableau& t) {
  const auto shape = HookArmShape::from_partition(t.shape());
  if (!shape) throw DomainError("plane partition needs a tableau of shape (m, n^b)");
  PlanePartitionRow row;
  row.bound = shape->b();
  const Multiset free = phi(t);
  for (int e : free.elements()) row.parts.push_back(e - 2);
  std::sort(row.parts.begin(), row.parts.end(), std::greater<>{});
  return row;
}

}  // namespace hookcsp
