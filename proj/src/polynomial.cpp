#include "hookcsp/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hookcsp/error.hpp"

namespace hookcsp {

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::constant(Coeff c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::size_t exponent, Coeff c) {
  std::vector<Coeff> v(exponent + 1, 0);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::Coeff IntPolynomial::at_one() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s += c;
  return s;
}

IntPolynomial::Coeff IntPolynomial::evaluate(Coeff q) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Coeff> v(k, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reflected(std::size_t k) const {
  if (degree() > static_cast<int>(k)) throw DomainError("reflection exponent below the degree");
  std::vector<Coeff> v(k + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[k - i] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::mod_power_minus_one(std::size_t n) const {
  if (n == 0) throw DomainError("reduction modulo q^0 - 1");
  std::vector<Coeff> v(n, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i % n] += coeffs_[i];
  return IntPolynomial(std::move(v));
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPolynomial::Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Coeff c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Coeff mag = c < 0 ? -c : c;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

PolynomialDivision divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  const auto lead = divisor.coeffs().back();
  if (lead != 1 && lead != -1) throw DomainError("divisor must have leading coefficient +-1");
  std::vector<IntPolynomial::Coeff> rem = dividend.coeffs();
  const std::size_t dd = divisor.coeffs().size() - 1;
  if (rem.size() <= dd) return {IntPolynomial{}, dividend};
  std::vector<IntPolynomial::Coeff> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const auto factor = rem[i] * lead;  // lead is its own inverse
    if (factor == 0) continue;
    quot[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * divisor.coeffs()[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial q_integer(int n) {
  if (n < 0) throw DomainError("q-integer of a negative number");
  return IntPolynomial(std::vector<IntPolynomial::Coeff>(static_cast<std::size_t>(n), 1));
}

IntPolynomial q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw DomainError("q-binomial needs 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  // row[j] holds [i choose j]_q for the current i.
  std::vector<IntPolynomial> row{IntPolynomial::constant(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<IntPolynomial> next(static_cast<std::size_t>(i) + 1);
    next[0] = IntPolynomial::constant(1);
    next[static_cast<std::size_t>(i)] = IntPolynomial::constant(1);
    for (int j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(static_cast<std::size_t>(j));
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

const IntPolynomial& cyclotomic(int e) {
  if (e < 1) throw DomainError("cyclotomic polynomial of order < 1");
  static std::mutex mutex;
  static std::map<int, IntPolynomial> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(e); it != memo.end()) return it->second;
  }
  // q^e - 1 divided by Phi_j for every proper divisor j of e.
  IntPolynomial p = IntPolynomial::monomial(static_cast<std::size_t>(e)) - IntPolynomial::constant(1);
  for (int j = 1; j < e; ++j) {
    if (e % j != 0) continue;
    auto [q, r] = divide(p, cyclotomic(j));
    if (!r.is_zero()) throw InconsistencyError("cyclotomic division left a remainder");
    p = std::move(q);
  }
  std::lock_guard lock(mutex);
  return memo.emplace(e, std::move(p)).first->second;
}

}  // namespace hookcsp
