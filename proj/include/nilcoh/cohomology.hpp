#pragma once

#include <cstddef>
#include <vector>

#include "nilcoh/ce_complex.hpp"
#include "nilcoh/errors.hpp"
#include "nilcoh/exterior.hpp"
#include "nilcoh/linalg.hpp"

namespace nilcoh {

/// H^k = Z^k / B^k with a chosen basis of representative cocycles.
struct DegreeCohomology {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<ExteriorElement> representatives;
  std::vector<ExteriorElement> coboundary_basis;  // basis of Im d_{k-1}
  std::vector<ExteriorElement> cocycle_basis;     // canonical basis of Ker d_k
};

/// Representatives: cocycle basis vectors (canonical kernel order) admitted
/// greedily when independent of the coboundaries and earlier admissions.
/// Needs d_k and d_{k-1}, so k <= complex.max_degree().
DegreeCohomology cohomology(const CEComplex& complex, std::size_t k);

/// A class in H^k, as coordinates in the representative basis. Classes in a
/// degree above the top one (products that overflow) have no coordinates and
/// are zero.
struct CohClass {
  std::size_t degree = 0;
  RatVector coordinates;

  bool is_zero() const { return nilcoh::is_zero(coordinates); }
  friend bool operator==(const CohClass&, const CohClass&) = default;
};

CohClass operator+(const CohClass& a, const CohClass& b);
CohClass operator*(const Rational& c, const CohClass& a);

/// Thrown by reduce() for a non-closed input; carries dz.
class NotClosedError : public InputError {
 public:
  NotClosedError(const std::string& what, ExteriorElement differential)
      : InputError(what), differential_(std::move(differential)) {}
  const ExteriorElement& differential() const { return differential_; }

 private:
  ExteriorElement differential_;
};

/// H*(Lambda, d) over Q with cup product. Reduction data is computed for all
/// degrees at construction; afterwards every query is const and pure.
class CohomologyRing {
 public:
  /// The complex must be complete (all degrees materialized).
  explicit CohomologyRing(CEComplex complex);

  const CEComplex& complex() const { return complex_; }
  std::size_t dim() const { return complex_.dim(); }

  std::size_t betti(std::size_t k) const { return degree(k).betti; }
  std::vector<std::size_t> betti_numbers() const;
  const DegreeCohomology& degree(std::size_t k) const;
  const std::vector<ExteriorElement>& representatives(std::size_t k) const {
    return degree(k).representatives;
  }

  /// Class of a closed homogeneous form. The zero form needs the explicit
  /// degree overload.
  CohClass reduce(const ExteriorElement& z) const;
  CohClass reduce(const ExteriorElement& z, std::size_t k) const;

  /// sum_i coordinates_i * representative_i.
  ExteriorElement form(const CohClass& c) const;

  CohClass cup(const CohClass& u, const CohClass& v) const;

  CohClass unit() const { return basis_class(0, 0); }
  CohClass zero_class(std::size_t k) const;
  CohClass basis_class(std::size_t k, std::size_t i) const;
  /// All basis classes of positive degree, ordered by degree then index.
  std::vector<CohClass> positive_basis() const;

 private:
  void check_class(const CohClass& c) const;

  CEComplex complex_;
  std::vector<DegreeCohomology> degrees_;
  std::vector<SpanSolver> reducers_;  // generators: coboundary basis, then representatives
};

long euler_characteristic(const CohomologyRing& ring);

/// betti_k == betti_{n-k} for every k.
bool poincare_check(const CohomologyRing& ring);

}  // namespace nilcoh
