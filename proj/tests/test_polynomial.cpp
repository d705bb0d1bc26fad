#include <doctest.h>

#include <random>

#include "hookcsp/error.hpp"
#include "hookcsp/polynomial.hpp"
#include "oracles.hpp"

using namespace hookcsp;

TEST_CASE("normalization and arithmetic") {
  CHECK(IntPolynomial{1, 2, 0, 0}.coeffs() == std::vector<IntPolynomial::Coeff>{1, 2});
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  const IntPolynomial a{1, 1};
  CHECK(a * a == IntPolynomial{1, 2, 1});
  CHECK(a - a == IntPolynomial{});
  CHECK(a.shifted(2) == IntPolynomial{0, 0, 1, 1});
  CHECK(IntPolynomial{1, 2}.reflected(3) == IntPolynomial{0, 0, 2, 1});
  CHECK(IntPolynomial{1, 2, 3, 4, 5}.mod_power_minus_one(2) == IntPolynomial{9, 6});
  CHECK(IntPolynomial{1, 2, 3}.evaluate(2) == 17);
}

TEST_CASE("to_string") {
  CHECK(IntPolynomial{1, 1, 2}.to_string() == "1 + q + 2q^2");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{0, -1, 0, 3}.to_string() == "-q + 3q^3");
}

TEST_CASE("exact division") {
  const IntPolynomial num = IntPolynomial{1, 1, 1} * IntPolynomial{2, 0, 1};
  auto [q, r] = divide(num, IntPolynomial{1, 1, 1});
  CHECK(q == IntPolynomial{2, 0, 1});
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divide(num, IntPolynomial{1, 2}), DomainError);
  CHECK(divide(IntPolynomial{3, 1}, IntPolynomial{1, 0, 1}).remainder == IntPolynomial{3, 1});
}

TEST_CASE("q-binomial examples") {
  CHECK(q_binomial(5, 0) == IntPolynomial{1});
  CHECK(q_binomial(2, 1) == IntPolynomial{1, 1});
  CHECK(q_binomial(4, 2) == IntPolynomial{1, 1, 2, 1, 1});
  CHECK_THROWS_AS(q_binomial(2, 3), DomainError);
}

TEST_CASE("property: q-binomial matches box partitions, is palindromic and symmetric") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      const IntPolynomial p = q_binomial(n, k);
      CHECK(p.coeffs() == oracle::q_binomial_by_partitions(n, k));
      CHECK(p.is_palindromic());
      CHECK(p == q_binomial(n, n - k));
      CHECK(p.degree() == k * (n - k));
      CHECK(static_cast<std::uint64_t>(p.at_one()) == oracle::binomial(n, k));
    }
}

TEST_CASE("q-binomial equals the q-factorial quotient") {
  auto factorial = [](int n) {
    IntPolynomial f{1};
    for (int i = 1; i <= n; ++i) f = f * q_integer(i);
    return f;
  };
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      auto [quot, rem] = divide(factorial(n), factorial(k) * factorial(n - k));
      CHECK(rem.is_zero());
      CHECK(quot == q_binomial(n, k));
    }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(2) == IntPolynomial{1, 1});
  CHECK(cyclotomic(3) == IntPolynomial{1, 1, 1});
  CHECK(cyclotomic(4) == IntPolynomial{1, 0, 1});
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
  // q^n - 1 is the product over divisors.
  for (int n = 1; n <= 30; ++n) {
    IntPolynomial prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == IntPolynomial::monomial(static_cast<std::size_t>(n)) - IntPolynomial{1});
  }
}
