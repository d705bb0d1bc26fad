#pragma once

#include <cstddef>
#include <vector>

#include "hookcsp/partition.hpp"
#include "hookcsp/tableau.hpp"

namespace hookcsp {

/// Sorted bag of integers drawn from the interval [lo, hi].
class Multiset {
 public:
  Multiset(int lo, int hi, std::vector<int> elements = {});

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::size_t count(int value) const;
  int sum() const;

  /// Rotates values by `steps` within [lo, hi]: e -> e+1, hi -> lo.
  Multiset rotated(int steps = 1) const;
  /// Adds delta to every element and to both bounds.
  Multiset shifted(int delta) const;

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  int lo_;
  int hi_;
  std::vector<int> elements_;
};

/// Every k-element multiset of [lo, hi], lexicographic by sorted elements.
std::vector<Multiset> all_multisets(int lo, int hi, int k);

/// Forced and free entry counts of SSYT((m, n^b), mu).
struct FreeEntryProfile {
  /// Number of free entries; negative when the family is empty.
  int beta = 0;
  /// gamma[i] = max(mu_{i+1} - n, 0): copies of letter i+1 forced into the arm.
  std::vector<int> gamma;
  /// deficit[i] = max(n - mu_{i+1}, 0): body columns that must miss letter i+1.
  std::vector<int> deficit;
  /// Free entries of a particular tableau; empty in a bare profile.
  Multiset free{2, 2};
};

/// Computes beta both as m - n - sum(gamma) and as n - sum(deficit) and
/// throws InconsistencyError if they differ. Throws DomainError when mu does
/// not have length b+2 or does not sum to m + n*b.
FreeEntryProfile beta_profile(const HookArmShape& shape, const Composition& content);

/// Free-entry multiset over [2, b+2]: the letters missing from the first n
/// columns, less n - mu_i copies of every letter i with mu_i < n. The arm
/// characterization (arm entries less gamma_i copies of each i) is computed
/// alongside and must agree.
///
/// Throws DomainError unless t is semistandard of shape (m, n^b) over the
/// alphabet {1, ..., b+2}.
Multiset phi(const Tableau& t);

/// Free entries read off the arm: row-one entries past column n with gamma_i
/// copies of each letter i removed.
Multiset arm_free_entries(const Tableau& t);

/// The unique tableau of SSYT((m, n^b), mu) whose free entries are `free`.
/// Throws InfeasibleFamily when beta < 0, DomainError when `free` is not a
/// beta-element multiset of [2, b+2].
Tableau phi_inverse(const HookArmShape& shape, const Composition& content, const Multiset& free);

/// phi(t) with every element decremented: a multiset over [1, b+1].
Multiset psi(const Tableau& t);

}  // namespace hookcsp
