#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hookcsp/bijection.hpp"
#include "hookcsp/enumeration.hpp"
#include "hookcsp/error.hpp"
#include "hookcsp/statistics.hpp"
#include "oracles.hpp"

using namespace hookcsp;

namespace {
const Word kExampleWord{3, 4, 4, 2, 2, 3, 1, 1, 1, 1, 2, 2, 3, 4};
}

TEST_CASE("cocharge of permutations") {
  CHECK(cocharge_permutation(Word{3, 2, 1, 4}) == 5);
  CHECK(cocharge_permutation(Word{4, 2, 1, 3}) == 4);
  CHECK(cocharge_permutation(Word{4, 3, 1, 2}) == 3);
  CHECK(cocharge_permutation(Word{1, 2}) == 0);
  for (int len = 0; len <= 8; ++len) {
    Word id(static_cast<std::size_t>(len));
    std::iota(id.begin(), id.end(), 1);
    CHECK(cocharge_permutation(id) == 0);
    CHECK(charge_permutation(id) == len * (len - 1) / 2);
    Word rev(id.rbegin(), id.rend());
    CHECK(cocharge_permutation(rev) == len * (len - 1) / 2);
    CHECK(charge_permutation(rev) == 0);
  }
  CHECK(charge_permutation(Word{3, 2, 1, 4}) == 1);
  CHECK_THROWS_AS(cocharge_permutation(Word{1, 1}), DomainError);
  CHECK_THROWS_AS(cocharge_permutation(Word{1, 3}), DomainError);
}

TEST_CASE("property: charge + cocharge = C(len, 2) for every permutation up to length 7") {
  for (int len = 1; len <= 7; ++len) {
    Word w(static_cast<std::size_t>(len));
    std::iota(w.begin(), w.end(), 1);
    do {
      REQUIRE(charge_permutation(w) + cocharge_permutation(w) == len * (len - 1) / 2);
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("standard subwords of the worked example") {
  const auto dec = standard_subwords(kExampleWord);
  const std::vector<Word> expected{{3, 2, 1, 4}, {4, 2, 1, 3}, {4, 3, 1, 2}, {1, 2}};
  CHECK(dec.subwords == expected);
  CHECK(dec.positions.front() == std::vector<std::size_t>{0, 4, 9, 13});
  CHECK(cocharge_word(kExampleWord) == 12);
}

TEST_CASE("standard subwords: small cases") {
  const auto ones = standard_subwords(Word{1, 1, 1});
  CHECK(ones.subwords == std::vector<Word>{{1}, {1}, {1}});
  const auto twice = standard_subwords(Word{2, 1, 2, 1});
  CHECK(twice.subwords == std::vector<Word>{{2, 1}, {2, 1}});
  CHECK(twice.positions == std::vector<std::vector<std::size_t>>{{2, 3}, {0, 1}});
  CHECK(cocharge_word(Word{2, 1, 2, 1}) == 2);
  CHECK_THROWS_AS(standard_subwords(Word{1, 2, 2}), DomainError);
  CHECK_THROWS_AS(standard_subwords(Word{2, 3}), DomainError);
  CHECK_THROWS_AS(cocharge_word(Word{0, 1}), DomainError);
}

TEST_CASE("property: subwords partition positions; lengths are the conjugate content") {
  for (const Tableau& t : enumerate_generic({Partition{4, 3, 2}, Composition{3, 3, 2, 1}})) {
    const Word w = reading_word(t);
    const auto dec = standard_subwords(w);
    std::vector<std::size_t> all;
    std::vector<int> lengths;
    for (std::size_t i = 0; i < dec.subwords.size(); ++i) {
      all.insert(all.end(), dec.positions[i].begin(), dec.positions[i].end());
      lengths.push_back(static_cast<int>(dec.subwords[i].size()));
      Word sorted = dec.subwords[i];
      std::sort(sorted.begin(), sorted.end());
      Word id(sorted.size());
      std::iota(id.begin(), id.end(), 1);
      CHECK(sorted == id);
      for (std::size_t j = 0; j < dec.positions[i].size(); ++j) CHECK(w[dec.positions[i][j]] == dec.subwords[i][j]);
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expected(w.size());
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(all == expected);
    CHECK(Partition(lengths) == Partition{3, 3, 2, 1}.conjugate());
  }
}

TEST_CASE("cocharge of tableaux") {
  const Tableau cocharge_input{{{1, 1, 1, 1, 2, 2, 3, 4}, {2, 2, 3}, {3, 4, 4}}, 4};
  CHECK(cocharge_tableau(cocharge_input) == 12);
  CHECK(cocharge_tableau(Tableau({{1, 1, 1, 1}}, 1)) == 0);
  CHECK_THROWS_AS(cocharge_tableau(Tableau({{1, 2, 2}}, 2)), DomainError);
}

TEST_CASE("kappa") {
  CHECK(kappa(Composition{4, 4, 3, 3}) == 0 + 4 + 6 + 9);
  CHECK(kappa(Composition{1, 1, 1}) == 3);
}

TEST_CASE("Kostka-Foulkes small values") {
  CHECK(kostka_foulkes({Partition{3, 1}, Composition{3, 1}}) == IntPolynomial{1});
  CHECK(modified_kostka_foulkes({Partition{4, 2, 2}, Composition{4, 2, 2}}) ==
        IntPolynomial::monomial(static_cast<std::size_t>(kappa(Composition{4, 2, 2}))));
  // Hand-computed charges of [[1,2],[3]] (2) and [[1,3],[2]] (1).
  CHECK(kostka_foulkes({Partition{2, 1}, Composition{1, 1, 1}}) == IntPolynomial{0, 1, 1});
  CHECK(kostka_foulkes({Partition{3}, Composition{1, 1, 1}}) == IntPolynomial::monomial(3));
  CHECK(kostka_foulkes({Partition{3}, Composition{1, 2}}) == IntPolynomial::monomial(1));
  CHECK(kostka_foulkes({Partition{1, 1}, Composition{2}}).is_zero());
}

TEST_CASE("Kostka-Foulkes at q=1 counts tableaux; non-partition contents use the sorted family") {
  const SsytFamily fam{Partition{5, 3, 1}, Composition{2, 2, 3, 1, 1}};
  const auto count = oracle::brute_force_ssyt({5, 3, 1}, {2, 2, 3, 1, 1}).size();
  CHECK(static_cast<std::size_t>(kostka_foulkes(fam).at_one()) == count);
  CHECK(static_cast<std::size_t>(modified_kostka_foulkes(fam).at_one()) == count);
}

TEST_CASE("property: K~ = q^kappa K(1/q) and K(1) = |SSYT| on partition contents") {
  for (int size = 1; size <= 8; ++size)
    for (const Composition& mu : compositions(size, std::min(size, 5), true)) {
      if (!mu.is_partition()) continue;
      for (const Composition& lam : compositions(size, std::min(size, 4), false)) {
        if (!lam.is_partition()) continue;
        const SsytFamily fam{Partition(lam.parts()), mu};
        const IntPolynomial k = kostka_foulkes(fam);
        const IntPolynomial mk = modified_kostka_foulkes(fam);
        CHECK(static_cast<std::size_t>(k.at_one()) == enumerate_generic(fam).size());
        if (!k.is_zero()) CHECK(mk == k.reflected(static_cast<std::size_t>(kappa(mu))));
        for (auto c : mk.coeffs()) CHECK(c >= 0);
      }
    }
}

TEST_CASE("property: modified Kostka-Foulkes is invariant under permuting the content") {
  // q = 1 side by enumeration on the unsorted content; full polynomial on the
  // hook-arm side via the free-entry weight.
  const Partition lam{5, 2, 2};
  std::vector<int> mu{1, 2, 3, 3};
  const IntPolynomial reference = modified_kostka_foulkes({lam, Composition{3, 3, 2, 1}});
  do {
    const Composition c(mu);
    CHECK(modified_kostka_foulkes({lam, c}) == reference);
    CHECK(static_cast<std::size_t>(reference.at_one()) == enumerate_generic({lam, c}).size());
    IntPolynomial by_free;
    for (const Tableau& t : enumerate_hook_arm(HookArmShape(5, 2, 2), c))
      by_free += IntPolynomial::monomial(static_cast<std::size_t>(plane_partition_of(t).weight() + 2 * 3));
    CHECK(by_free == reference);
  } while (std::next_permutation(mu.begin(), mu.end()));
}

TEST_CASE("plane partition of a hook-arm tableau") {
  const Tableau arm_sample{{{1, 1, 1, 1, 1, 1, 2, 4, 4, 4, 4, 6},
                     {2, 2, 2, 3, 3},
                     {3, 3, 4, 4, 4},
                     {5, 5, 5, 5, 5},
                     {6, 6, 6, 6, 6}},
                    6};
  const PlanePartitionRow pi = plane_partition_of(arm_sample);
  CHECK(pi.parts == std::vector<int>{2, 2, 0});
  CHECK(pi.weight() == 4);
  CHECK(pi.bound == 4);

  const auto single = enumerate_hook_arm(HookArmShape(2, 2, 1), Composition{2, 1, 1});
  CHECK(plane_partition_of(single.front()).parts.empty());
  CHECK_THROWS_AS(plane_partition_of(Tableau({{1, 1, 2}, {2, 3}, {3}}, 3)), DomainError);
}

TEST_CASE("property: free-entry weights generate the q-binomial") {
  const HookArmShape shape(12, 5, 4);
  const Composition mu{6, 4, 4, 7, 5, 6};
  IntPolynomial gf;
  for (const Tableau& t : enumerate_hook_arm(shape, mu)) {
    const PlanePartitionRow pi = plane_partition_of(t);
    CHECK(std::is_sorted(pi.parts.begin(), pi.parts.end(), std::greater<>{}));
    for (int p : pi.parts) CHECK((p >= 0 && p <= 4));
    gf += IntPolynomial::monomial(static_cast<std::size_t>(pi.weight()));
  }
  CHECK(gf == q_binomial(7, 3));
}

TEST_CASE("cocharge = |pi_T| + n C(b+1, 2) on a partition-content family") {
  const HookArmShape shape(7, 2, 2);
  const Composition mu{4, 3, 2, 2};
  const auto fam = enumerate_hook_arm(shape, mu);
  REQUIRE_FALSE(fam.empty());
  for (const Tableau& t : fam) CHECK(cocharge_tableau(t) == plane_partition_of(t).weight() + 2 * 3);
}
