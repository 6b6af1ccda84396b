#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilcoh/cohomology.hpp"

namespace nilcoh {

struct CupLengthResult {
  std::size_t cl = 0;
  /// Basis classes whose product is nonzero; length cl.
  std::vector<CohClass> witness;
  /// spans_by_stage[k] = dim of the span of all k-fold products of
  /// positive-degree classes; index 0 is H^0, the last entry (k = cl+1) is 0.
  std::vector<std::size_t> spans_by_stage;
};

/// Exact cup-length via V_1 = H^+, V_{k+1} = V_k * H^+. By multilinearity a
/// k-fold product is nonzero for some classes iff it is nonzero on some tuple
/// of basis classes, so the recursion over basis products decides cl.
CupLengthResult cup_length(const CohomologyRing& ring);

/// Default size cap for the oracle: 64, or NILCOH_ORACLE_CAP when set.
std::size_t default_oracle_cap();

/// Brute force over ordered tuples of positive-degree basis classes, wedging
/// representative forms and testing exactness. Test oracle only: throws
/// CapExceededError when sum of Betti numbers exceeds `cap`.
std::size_t cup_length_oracle(const CohomologyRing& ring, std::optional<std::size_t> max_k = std::nullopt,
                              std::size_t cap = default_oracle_cap());

struct SymplecticnessResult {
  bool is_cohomologically_symplectic = false;
  std::size_t half_dim = 0;  // m, with dim = 2m
  std::optional<CohClass> witness;    // omega in H^2 with omega^m != 0
  std::optional<CohClass> top_power;  // omega^m
};

/// Decision by the polarization criterion (some m-tuple of H^2 basis classes
/// has nonzero product), then a witness from the grid {0..m}^{b2} swept in
/// graded lexicographic order. Throws InputError for odd dimension.
SymplecticnessResult is_cohomologically_symplectic(const CohomologyRing& ring);

/// The polarization criterion against an arbitrary basis of H^2.
bool has_nonvanishing_top_power(const CohomologyRing& ring, std::span<const CohClass> degree_two_basis);

/// omega^m for a degree-2 class.
CohClass top_power(const CohomologyRing& ring, const CohClass& omega);

struct ClassVerdict {
  bool closed = false;
  ExteriorElement differential;  // d omega
  bool exact = false;
  std::optional<CohClass> top_power;
  bool symplectic = false;
};

/// Closedness, exactness and [omega]^m for a user 2-form. Throws InputError
/// unless omega is a degree-2 form (or zero) on an even-dimensional ring.
ClassVerdict verify_class(const CohomologyRing& ring, const ExteriorElement& omega);

}  // namespace nilcoh
