#include <doctest.h>

#include <random>

#include "hookcsp/bijection.hpp"
#include "hookcsp/csp.hpp"
#include "hookcsp/enumeration.hpp"
#include "hookcsp/error.hpp"
#include "hookcsp/statistics.hpp"
#include "oracles.hpp"

using namespace hookcsp;

TEST_CASE("evaluation at roots of unity: examples") {
  CHECK(eval_at_root_of_unity(q_binomial(2, 1), 2, 1) == 0);
  CHECK(eval_at_root_of_unity(q_binomial(4, 2), 3, 0) == 6);
  // 1+q+2q^2+q^3+q^4 folds to 2(1+q+q^2) = 0 mod Phi_3.
  CHECK(eval_at_root_of_unity(q_binomial(4, 2), 3, 1) == 0);
  CHECK(eval_at_root_of_unity(IntPolynomial{0, 1}, 4, 1) == std::nullopt);  // i
  CHECK(eval_at_root_of_unity(IntPolynomial{0, 0, 1}, 4, 1) == -1);
  CHECK(eval_at_root_of_unity(IntPolynomial{1, 1}, 2, 3) == 0);  // d reduced mod N
  CHECK(eval_at_root_of_unity(IntPolynomial{}, 5, 2) == 0);
  CHECK_THROWS_AS(eval_at_root_of_unity(IntPolynomial{1}, 0, 0), DomainError);
}

TEST_CASE("property: exact evaluation agrees with floating point") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 40);
  std::uniform_int_distribution<int> ord(1, 12);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<IntPolynomial::Coeff> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    const IntPolynomial p(c);
    const int n = ord(rng);
    for (int d = 0; d < n; ++d) {
      const auto exact = eval_at_root_of_unity(p, n, d);
      const auto approx = oracle::eval_complex(p, n, d);
      if (exact) {
        CHECK(std::abs(approx - std::complex<double>(static_cast<double>(*exact), 0.0)) < 1e-6);
      } else {
        const bool integral = std::abs(approx.imag()) < 1e-6 && std::abs(approx.real() - std::round(approx.real())) < 1e-6;
        CHECK_FALSE(integral);
      }
    }
  }
}

TEST_CASE("multiset oracle") {
  CHECK(multiset_fixed_oracle(4, 3, 0) == oracle::binomial(6, 3));
  CHECK(multiset_fixed_oracle(2, 1, 1) == 0);
  CHECK(multiset_fixed_oracle(3, 2, 1) == 0);
  CHECK(multiset_fixed_oracle(3, 3, 1) == 1);  // {1,2,3}
  CHECK(multiset_fixed_oracle(4, 2, 2) == 2);  // {1,3}, {2,4}
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 5; ++k)
      for (int d = 0; d < n; ++d)
        CHECK(eval_at_root_of_unity(q_binomial(n + k - 1, k), n, d) ==
              static_cast<std::int64_t>(multiset_fixed_oracle(n, k, d)));
}

TEST_CASE("fixed points of the worked family") {
  const HookArmShape shape(12, 5, 4);
  const Composition mu{6, 4, 4, 7, 5, 6};
  CHECK(count_fixed_points(shape, mu, 0) == 35);
  const IntPolynomial f = q_binomial(7, 3);
  for (int d = 0; d < 5; ++d) {
    CHECK(eval_at_root_of_unity(f, 5, d) == static_cast<std::int64_t>(count_fixed_points(shape, mu, d)));
    CHECK(count_fixed_points(shape, mu, d) == multiset_fixed_oracle(5, 3, d));
  }
}

TEST_CASE("verify_csp: worked family") {
  const CspReport r = verify_csp(HookArmShape(12, 5, 4), Composition{6, 4, 4, 7, 5, 6});
  CHECK(r.verdict);
  CHECK(r.polynomial == q_binomial(7, 3));
  CHECK(r.beta == 3);
  CHECK(r.group_order == 5);
  CHECK(r.family_size == 35);
  CHECK(r.per_exponent.size() == 5);
  CHECK(r.orbit_sizes == std::vector<std::size_t>(7, 5));
  CHECK(r.orbit_congruence);
}

TEST_CASE("verify_csp: beta = 0 and infeasible families") {
  const CspReport r = verify_csp(HookArmShape(2, 2, 1), Composition{2, 1, 1});
  CHECK(r.verdict);
  CHECK(r.polynomial == IntPolynomial{1});
  CHECK(r.orbit_sizes == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(verify_csp(HookArmShape(2, 2, 1), Composition{3, 1, 0}), InfeasibleFamily);
}

TEST_CASE("verify_csp: (2n, n^b) with rectangular content uses [n+b choose b]") {
  for (int n = 1; n <= 3; ++n)
    for (int b = 1; b <= 3; ++b) {
      const CspReport r =
          verify_csp(HookArmShape(2 * n, n, b), Composition(std::vector<int>(static_cast<std::size_t>(b + 2), n)));
      CHECK(r.verdict);
      CHECK(r.polynomial == q_binomial(n + b, b));
    }
}

TEST_CASE("verify_kostka_link") {
  CHECK(verify_kostka_link(HookArmShape(12, 5, 4), Composition{6, 4, 4, 7, 5, 6}));
  CHECK(verify_kostka_link(HookArmShape(2, 2, 1), Composition{2, 1, 1}));
  CHECK(modified_kostka_foulkes({Partition{2, 2}, Composition{2, 1, 1}}) == IntPolynomial::monomial(2));
  for (int cells = 2; cells <= 10; ++cells)
    for (int b = 1; b < cells; ++b)
      for (int n = 1; n * (b + 1) <= cells; ++n) {
        const HookArmShape shape(cells - n * b, n, b);
        for (const Composition& mu : compositions(cells, b + 2, true)) {
          if (beta_profile(shape, mu).beta >= 0) CHECK(verify_kostka_link(shape, mu));
        }
      }
}
