#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nilcoh/matrix.hpp"
#include "nilcoh/rational.hpp"

namespace nilcoh {

/// Univariate polynomial over Q, coefficients stored lowest degree first with
/// no trailing zeros (the zero polynomial is empty).
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coefficients);

  static RatPolynomial constant(const Rational& c);
  static RatPolynomial monomial(const Rational& c, std::size_t degree);
  /// Product of (t - r) over the given roots.
  static RatPolynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& t) const;

  RatPolynomial derivative() const;
  RatPolynomial monic() const;

  RatPolynomial operator-() const;
  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& c, const RatPolynomial& p);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// Euclidean division; throws InputError for a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd (zero only when both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

/// p / gcd(p, p'): same roots, all simple.
RatPolynomial square_free_part(const RatPolynomial& p);

/// p, p', then negated remainders until the last nonzero term.
std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p);

/// Distinct real roots of p.
std::size_t count_real_roots(const RatPolynomial& p);

/// Distinct real roots of p in the half-open interval (lo, hi].
std::size_t count_real_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi);

/// True iff every complex root of p is real. Throws InputError for p = 0.
bool sturm_real_rooted(const RatPolynomial& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const RatPolynomial& p);

/// det(t I - A), monic of degree n.
RatPolynomial characteristic_polynomial(const RatMatrix& a);

}  // namespace nilcoh
