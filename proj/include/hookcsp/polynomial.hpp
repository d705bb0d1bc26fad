#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hookcsp {

/// Dense univariate polynomial in q with integer coefficients.
/// coeffs()[i] is the coefficient of q^i; no trailing zeros are stored, so
/// the zero polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs);
  IntPolynomial(std::initializer_list<Coeff> coeffs) : IntPolynomial(std::vector<Coeff>(coeffs)) {}

  static IntPolynomial constant(Coeff c);
  static IntPolynomial monomial(std::size_t exponent, Coeff c = 1);

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Coeff at_one() const;
  Coeff evaluate(Coeff q) const;

  /// Multiplication by q^k.
  IntPolynomial shifted(std::size_t k) const;
  /// q^k * p(1/q); requires k >= degree().
  IntPolynomial reflected(std::size_t k) const;
  /// Remainder modulo q^n - 1: exponents folded mod n.
  IntPolynomial mod_power_minus_one(std::size_t n) const;
  bool is_palindromic() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, e.g. "1 + q + 2q^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Coeff> coeffs_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division by a divisor with leading coefficient +-1, exact over Z.
/// Throws DomainError for any other divisor.
PolynomialDivision divide(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// [n]_q = 1 + q + ... + q^{n-1}.
IntPolynomial q_integer(int n);

/// Gaussian binomial [n choose k]_q via the recurrence
/// [n,k] = [n-1,k-1] + q^k [n-1,k]. Throws DomainError unless 0 <= k <= n.
IntPolynomial q_binomial(int n, int k);

/// The e-th cyclotomic polynomial, memoized; thread-safe.
const IntPolynomial& cyclotomic(int e);

}  // namespace hookcsp
