#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilcoh/matrix.hpp"

namespace nilcoh {

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // increasing
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form over Q.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Canonical null-space basis: one vector per free column (in increasing
/// order) with that free variable set to 1 and the other free variables 0.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// The pivot columns of `m`, taken from the original matrix.
std::vector<RatVector> image_basis(const RatMatrix& m);

/// Determinant of a square matrix.
Rational determinant(const RatMatrix& m);

/// Precomputed elimination for repeated span-membership queries against a
/// fixed generator list.
class SpanSolver {
 public:
  SpanSolver(std::span<const RatVector> generators, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t generator_count() const { return generator_count_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Coefficients c with sum c_i g_i == target, free generators set to zero;
  /// nullopt when target is outside the span.
  std::optional<RatVector> solve(const RatVector& target) const;
  bool contains(const RatVector& target) const { return solve(target).has_value(); }

 private:
  std::size_t ambient_dim_;
  std::size_t generator_count_;
  std::vector<std::size_t> pivots_;
  RatMatrix transform_;  // E with E * [g_0 ... g_m] == rref
};

/// One-shot form of SpanSolver::solve. Throws InputError on length mismatch.
std::optional<RatVector> solve_in_span(const RatVector& target,
                                       std::span<const RatVector> generators);

RatVector linear_combination(std::span<const Rational> coefficients,
                             std::span<const RatVector> vectors, std::size_t length);

}  // namespace nilcoh
