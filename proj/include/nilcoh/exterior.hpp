#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nilcoh/rational.hpp"

namespace nilcoh {

/// Ambient dimensions above this are rejected (monomials are 64-bit masks).
inline constexpr std::size_t kMaxGenerators = 64;

/// x_{i1} ^ ... ^ x_{ik} with i1 < ... < ik, stored as a bit set over 0-based
/// generator indices. Ordered lexicographically by index tuple.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial from_indices(const std::vector<std::size_t>& indices);  // any order, no repeats
  static Monomial generator(std::size_t i);
  static constexpr Monomial from_bits(std::uint64_t bits) { return Monomial(bits); }

  std::uint64_t bits() const { return bits_; }
  std::size_t degree() const;
  std::vector<std::size_t> indices() const;
  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  std::optional<std::size_t> max_index() const;

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(Monomial a, Monomial b);

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Sign of moving a's generators in front of b's in a wedge product, or 0
/// when they share a generator. The merged monomial is a | b.
int wedge_sign(Monomial a, Monomial b);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Monomial> monomial_basis(std::size_t n, std::size_t k);

/// Element of the exterior algebra on n degree-1 generators x_1..x_n.
class ExteriorElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit ExteriorElement(std::size_t ambient_dim = 0);
  static ExteriorElement generator(std::size_t ambient_dim, std::size_t i);
  static ExteriorElement monomial(std::size_t ambient_dim, Monomial m, const Rational& coefficient = 1);
  static ExteriorElement unit(std::size_t ambient_dim) { return monomial(ambient_dim, Monomial{}); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Common degree of all terms; nullopt for zero or mixed degrees.
  std::optional<std::size_t> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }
  /// Homogeneous part of the given degree.
  ExteriorElement part(std::size_t degree) const;

  Rational coefficient(Monomial m) const;
  void add_term(Monomial m, const Rational& coefficient);

  ExteriorElement& operator+=(const ExteriorElement& other);
  ExteriorElement& operator-=(const ExteriorElement& other);
  ExteriorElement& operator*=(const Rational& factor);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(const Rational& c, ExteriorElement a) { return a *= c; }
  ExteriorElement operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

 private:
  void check_compatible(const ExteriorElement& other) const;

  std::size_t ambient_dim_;
  Terms terms_;
};

/// Bilinear exterior product. Throws InputError on ambient mismatch.
ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v);

}  // namespace nilcoh
