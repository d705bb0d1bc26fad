#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hookcsp/enumeration.hpp"
#include "hookcsp/polynomial.hpp"
#include "hookcsp/tableau.hpp"

namespace hookcsp {

// Permutation words. Throw DomainError unless w is a permutation of 1..len.
int cocharge_permutation(std::span<const int> w);
int charge_permutation(std::span<const int> w);

/// A word split into standard subwords. positions[i] are the indices of w,
/// ascending, that subwords[i] was read from.
struct SubwordDecomposition {
  std::vector<Word> subwords;
  std::vector<std::vector<std::size_t>> positions;
};

/// Repeatedly select the rightmost 1, then for j = 2, 3, ... the rightmost j
/// strictly left of the previous selection (wrapping to the rightmost j of
/// the whole remaining word when there is none), up to the largest letter
/// left; remove the selection and repeat.
///
/// Throws DomainError unless the content of w is a partition.
SubwordDecomposition standard_subwords(std::span<const int> w);

/// Sum of cocharges (resp. charges) of the standard subwords.
int cocharge_word(std::span<const int> w);
int charge_word(std::span<const int> w);

/// cc(rw(t)). Throws DomainError unless content(t) is a partition.
int cocharge_tableau(const Tableau& t);
int charge_tableau(const Tableau& t);

/// sum_i (i-1) mu_i with 1-indexed i.
int kappa(const Composition& mu);

/// Charge and cocharge generating functions over a family. A content that
/// is not a partition is replaced by its decreasing rearrangement, which
/// leaves the modified polynomial unchanged.
IntPolynomial kostka_foulkes(const SsytFamily& family);
IntPolynomial modified_kostka_foulkes(const SsytFamily& family);

/// Same sums over an explicit list of tableaux with partition content.
IntPolynomial charge_generating_function(std::span<const Tableau> tableaux);
IntPolynomial cocharge_generating_function(std::span<const Tableau> tableaux);

/// One-row plane partition: weakly decreasing parts, each <= bound.
struct PlanePartitionRow {
  std::vector<int> parts;
  int bound = 0;

  int weight() const;
  friend bool operator==(const PlanePartitionRow&, const PlanePartitionRow&) = default;
};

/// Free entries of a (m, n^b) tableau shifted down by 2 and sorted
/// decreasingly. Throws DomainError if t is not of that shape.
PlanePartitionRow plane_partition_of(const Tableau& t);

}  // namespace hookcsp
