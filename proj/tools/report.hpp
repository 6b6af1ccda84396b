#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nilcoh/bounds.hpp"
#include "nilcoh/cohomology.hpp"
#include "nilcoh/invariants.hpp"
#include "nilcoh/lie_algebra.hpp"

namespace nilcoh::cli {

enum class Format { Text, Json };

struct CohomologySummary {
  std::string algebra_name;
  std::size_t dim = 0;
  std::vector<DegreeCohomology> degrees;  // 0..max degree
  std::optional<long> euler_characteristic;  // only when all degrees are known
  std::optional<bool> poincare_duality;
};

struct VerifyQuery {
  std::string expression;
  ClassVerdict verdict;
};

std::string describe_violation(const JacobiViolation& v, std::size_t dim);

void write_check(std::ostream& out, Format format, const LieAlgebra& a, const ClassificationReport& report);
void write_cohomology(std::ostream& out, Format format, const CohomologySummary& summary, bool reps);
void write_cup_length(std::ostream& out, Format format, const CohomologyRing& ring, const CupLengthResult& result);
void write_symplectic(std::ostream& out, Format format, const CohomologyRing& ring, const SymplecticnessResult& result,
                      bool witness, const std::optional<VerifyQuery>& verify);
void write_bounds(std::ostream& out, Format format, const BoundsReport& report);
void write_algebra(std::ostream& out, Format format, const LieAlgebra& a);

/// "closed, non-exact, ω^2 = 2·[e1^e2^e3^e4] ≠ 0: symplectic" and variants.
std::string describe_verdict(const CohomologyRing& ring, const ClassVerdict& verdict);

/// "[e1]·[e4]·[e2^e3]"
std::string describe_product(const CohomologyRing& ring, const std::vector<CohClass>& factors);

}  // namespace nilcoh::cli
