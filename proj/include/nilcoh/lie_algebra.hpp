#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilcoh/matrix.hpp"
#include "nilcoh/rational.hpp"

namespace nilcoh {

/// c_{ij}^k with 0-based indices: [e_i, e_j] = sum_k c_{ij}^k e_k.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis e_1..e_n. Only i < j keys are stored; constants supplied with
/// i > j are folded by antisymmetry. The Jacobi identity is not enforced at
/// construction, see validate().
class LieAlgebra {
 public:
  /// Throws InputError for dim 0, indices out of range, a nonzero c_{ii}^k,
  /// or the same (i,j,k) given twice after folding.
  LieAlgebra(std::string name, std::size_t dim, std::vector<StructureConstant> constants);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }

  /// Sorted by (i, j, k), i < j, no zeros.
  const std::vector<StructureConstant>& structure_constants() const { return constants_; }
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  bool is_abelian() const { return constants_.empty(); }

  /// [e_i, e_j] in coordinates.
  const RatVector& bracket(std::size_t i, std::size_t j) const;
  RatVector bracket(const RatVector& u, const RatVector& v) const;

  /// Matrix of ad x = [x, -].
  RatMatrix ad(std::size_t i) const;
  RatMatrix ad(const RatVector& x) const;

  LieAlgebra renamed(std::string name) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<StructureConstant> constants_;
  std::vector<RatVector> brackets_;  // dim*dim table, antisymmetric
};

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based, i < j < k
  RatVector jacobiator;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct ValidationReport {
  std::optional<JacobiViolation> violation;  // first in lexicographic order
  bool ok() const { return !violation.has_value(); }
};

ValidationReport validate(const LieAlgebra& a);

/// Dimensions of g, [g,g], [g,[g,g]], ... up to and including the first
/// repeated dimension's value once, e.g. h3 -> {3,1,0}, r2 -> {2,1}.
std::vector<std::size_t> lower_central_series(const LieAlgebra& a);
bool is_nilpotent(const LieAlgebra& a);

std::vector<std::size_t> derived_series(const LieAlgebra& a);
bool is_solvable(const LieAlgebra& a);

/// A full flag of ideals 0 < I_1 < ... < I_n = g, I_k = span(generators[0..k)).
struct IdealFlag {
  std::vector<RatVector> generators;
  std::vector<RatVector> subspace(std::size_t k) const {
    return {generators.begin(), generators.begin() + static_cast<std::ptrdiff_t>(k)};
  }
};

struct ClassificationReport {
  bool is_abelian = false;
  bool is_nilpotent = false;
  std::vector<std::size_t> lower_central_series;
  bool is_solvable = false;
  std::vector<std::size_t> derived_series;
  /// Every char(ad e_i) has only real roots.
  bool real_spectrum_on_basis = false;
  /// Rational flag of ideals when one was found.
  std::optional<IdealFlag> completely_solvable_certificate;
  /// Why no certificate was produced (empty when one was).
  std::string certificate_note;
};

ClassificationReport classify(const LieAlgebra& a);

/// Search for a rational flag of ideals; nullopt means "not found", which
/// does not prove that none exists over R.
std::optional<IdealFlag> find_ideal_flag(const LieAlgebra& a, std::string* note = nullptr);

/// True iff span(subspace) is an ideal of a.
bool is_ideal(const LieAlgebra& a, const std::vector<RatVector>& subspace);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Re-express a in the basis given by the columns of `basis` (invertible).
LieAlgebra change_basis(const LieAlgebra& a, const RatMatrix& basis);

}  // namespace nilcoh
