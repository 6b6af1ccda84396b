#pragma once

// Random generators and independent oracles shared by the unit tests and the
// acceptance runner. Oracles here use dense index-tuple arithmetic and plain
// Gaussian elimination so they share no code with the library's sparse paths.

#include <cstddef>
#include <random>
#include <vector>

#include "nilcoh/cohomology.hpp"
#include "nilcoh/exterior.hpp"
#include "nilcoh/lie_algebra.hpp"
#include "nilcoh/matrix.hpp"

namespace nilcoh::testing {

using Rng = std::mt19937_64;
using Dense = std::vector<std::vector<Rational>>;

Rational random_rational(Rng& rng, long bound = 3, long max_den = 2);
RatMatrix random_invertible(Rng& rng, std::size_t n);

/// Brackets of e_1..e_p land in the span of the central e_{p+1}..e_n.
LieAlgebra random_two_step(Rng& rng, std::size_t dim);

/// One of: a random two-step algebra, or a catalog algebra in a random basis.
LieAlgebra random_valid_algebra(Rng& rng);

ExteriorElement random_homogeneous(Rng& rng, std::size_t n, std::size_t k, std::size_t max_terms = 4);

/// Rank by fraction-based Gaussian elimination on a dense copy.
std::size_t oracle_rank(Dense m);

/// Jacobi identity checked directly on the structure constants.
bool oracle_jacobi(const LieAlgebra& a);

/// Dense matrix of d: Lambda^k -> Lambda^{k+1} in the lexicographic basis of
/// sorted index tuples, built from d x_m = sum_{i<j} c_ij^m x_i x_j.
Dense oracle_differential(const LieAlgebra& a, std::size_t k);

/// b_k = C(n,k) - rank d_k - rank d_{k-1} from the dense differentials.
std::vector<std::size_t> oracle_betti(const LieAlgebra& a);

bool is_exact(const CohomologyRing& ring, const ExteriorElement& form);

std::size_t binomial(std::size_t n, std::size_t k);

/// Non-abelian nilpotent catalog entries.
std::vector<LieAlgebra> nilpotent_catalog();

}  // namespace nilcoh::testing
