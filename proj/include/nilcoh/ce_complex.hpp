#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nilcoh/exterior.hpp"
#include "nilcoh/lie_algebra.hpp"
#include "nilcoh/matrix.hpp"

namespace nilcoh {

// Sign convention: d x_k = + sum_{i<j} c_{ij}^k x_i ^ x_j, so the Heisenberg
// bracket [e1,e2] = e3 gives d x3 = x1 ^ x2. This is the negative of the
// usual (dx)(e_i,e_j) = -x([e_i,e_j]); kernels, images and products agree.

/// d x_k as a 2-form (k is 0-based).
ExteriorElement differential_on_generator(const LieAlgebra& a, std::size_t k);

/// d extended to all of the exterior algebra by the graded Leibniz rule.
ExteriorElement differential_by_leibniz(const LieAlgebra& a, const ExteriorElement& u);

/// (Lambda(x_1..x_n), d) with d_k : Lambda^k -> Lambda^{k+1} stored as sparse
/// matrices in the lexicographic monomial bases. Immutable once built.
class CEComplex {
 public:
  /// Builds d_0..d_{max_degree} (all degrees by default) and checks
  /// d_{k+1} d_k = 0, throwing ConsistencyError otherwise.
  explicit CEComplex(LieAlgebra algebra, std::optional<std::size_t> max_degree = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  /// Highest degree k with d_k materialized.
  std::size_t max_degree() const { return differentials_.size() - 1; }
  bool is_complete() const { return max_degree() == dim(); }

  const std::vector<Monomial>& basis(std::size_t k) const;
  std::size_t index_of(Monomial m) const;
  const RatMatrix& differential(std::size_t k) const;

  RatVector coordinates(const ExteriorElement& u, std::size_t k) const;
  ExteriorElement element(const RatVector& coordinates, std::size_t k) const;

  /// d u through the stored matrices. u must be homogeneous; the zero
  /// element maps to zero.
  ExteriorElement apply_d(const ExteriorElement& u) const;

 private:
  LieAlgebra algebra_;
  std::vector<std::vector<Monomial>> bases_;  // degrees 0..min(max_degree + 1, n)
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> positions_;
  std::vector<RatMatrix> differentials_;
};

CEComplex build_complex(const LieAlgebra& a, std::optional<std::size_t> max_degree = std::nullopt);

}  // namespace nilcoh
