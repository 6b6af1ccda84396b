#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilcoh/cohomology.hpp"
#include "nilcoh/invariants.hpp"
#include "nilcoh/lie_algebra.hpp"

namespace nilcoh {

// LS category is normalized so that cat(point) = 0.

/// How a step's number follows from the steps it references.
enum class StepRule {
  Given,    // cited or computed constant, no references
  Scale,    // value = factor * ref
  Sum,      // value = sum of refs + offset
  Follows,  // value = ref + offset
  Logical,  // implication without a number
};

struct DerivationStep {
  std::string key;
  std::string statement;
  std::string citation;
  std::vector<std::size_t> hypothesis_refs;  // indices of earlier steps
  StepRule rule = StepRule::Logical;
  std::optional<long> value;
  long factor = 1;
  long offset = 0;
};

/// Recomputes every numeric step from its references. On failure `why`
/// names the first offending step.
bool check_derivation(std::span<const DerivationStep> steps, std::string* why = nullptr);

enum class Asphericity { Aspherical, Indeterminate };

struct AsphericityReport {
  Asphericity verdict = Asphericity::Indeterminate;
  std::vector<DerivationStep> steps;
  std::string explanation;
};

/// Symplectic asphericity from the nilpotent / completely solvable
/// sufficient conditions. Never claims non-asphericity.
AsphericityReport asphericity_report(const ClassificationReport& classification,
                                     const SymplecticnessResult& symplectic);

/// dim(a) for nilpotent or certified completely solvable a; HypothesisError
/// otherwise.
std::size_t cat_of_nilmanifold(const LieAlgebra& a);
std::size_t cat_of_nilmanifold(const LieAlgebra& a, const ClassificationReport& classification);

struct SwgtChain {
  long cat_total_space_bound = 0;
  std::vector<DerivationStep> steps;
};

/// cat E >= swgt((p*[w])^m v^n) >= swgt(p*[w]^m) + swgt(v^n) >= 2m + n for
/// a CP^n-fibration E over a closed symplectically aspherical M^{2m}.
SwgtChain swgt_chain(long m, long fiber_n, const std::string& total_space = "E");

enum class StrongerBound { Kerman, Aspherical, Tie };

struct OrbitBounds {
  long kerman = 0;                 // m + cl
  std::optional<long> aspherical;  // 3m, only when aspherical
  StrongerBound stronger = StrongerBound::Kerman;
  std::vector<DerivationStep> steps;
};

/// Closed-trajectory lower bounds for a symplectic magnetic flow on M^{2m}.
/// Throws InputError unless m >= 1 and 1 <= cl <= 2m.
OrbitBounds orbit_bounds(long m, long cl, bool aspherical);

struct BoundsReport {
  std::string algebra_name;
  std::size_t manifold_dim = 0;
  std::shared_ptr<const CohomologyRing> ring;
  ClassificationReport classification;
  CupLengthResult cup;
  std::size_t cl = 0;
  std::optional<std::size_t> cat_manifold;
  std::string cat_note;
  std::optional<SymplecticnessResult> symplectic;  // even dimension only
  Asphericity aspherical = Asphericity::Indeterminate;
  std::string asphericity_note;
  std::optional<long> swgt_omega;
  std::optional<long> cat_total_space_bound;
  std::optional<long> orbit_bound_kerman;
  std::optional<long> orbit_bound_aspherical;
  std::optional<StrongerBound> stronger;
  std::string orbit_note;
  std::vector<DerivationStep> steps;
};

/// classify -> complex -> ring -> cup-length -> symplecticness ->
/// asphericity -> bounds. Throws InputError when a fails the Jacobi identity.
BoundsReport full_report(const LieAlgebra& a);

}  // namespace nilcoh
