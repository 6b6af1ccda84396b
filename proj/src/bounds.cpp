#include "nilcoh/bounds.hpp"

#include <string>

#include "nilcoh/errors.hpp"

namespace nilcoh {

namespace {

std::string str(long v) { return std::to_string(v); }

void append_steps(std::vector<DerivationStep>& dst, std::vector<DerivationStep> src) {
  const std::size_t shift = dst.size();
  for (auto& step : src) {
    for (auto& r : step.hypothesis_refs) r += shift;
    dst.push_back(std::move(step));
  }
}

}  // namespace

bool check_derivation(std::span<const DerivationStep> steps, std::string* why) {
  auto fail = [&](std::size_t i, const std::string& reason) {
    if (why) *why = "step " + std::to_string(i) + " (" + steps[i].key + "): " + reason;
    return false;
  };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    for (auto r : s.hypothesis_refs)
      if (r >= i) return fail(i, "refers forward");
    auto ref_value = [&](std::size_t r) -> std::optional<long> { return steps[r].value; };
    switch (s.rule) {
      case StepRule::Given:
        if (!s.value) return fail(i, "missing value");
        if (!s.hypothesis_refs.empty()) return fail(i, "given step with references");
        break;
      case StepRule::Scale: {
        if (!s.value || s.hypothesis_refs.size() != 1) return fail(i, "malformed scale step");
        const auto v = ref_value(s.hypothesis_refs[0]);
        if (!v || *s.value != s.factor * *v) return fail(i, "value is not factor * reference");
        break;
      }
      case StepRule::Sum: {
        if (!s.value || s.hypothesis_refs.empty()) return fail(i, "malformed sum step");
        long total = s.offset;
        for (auto r : s.hypothesis_refs) {
          const auto v = ref_value(r);
          if (!v) return fail(i, "sum over a step without a value");
          total += *v;
        }
        if (*s.value != total) return fail(i, "value is not the sum of references");
        break;
      }
      case StepRule::Follows: {
        if (!s.value || s.hypothesis_refs.size() != 1) return fail(i, "malformed follows step");
        const auto v = ref_value(s.hypothesis_refs[0]);
        if (!v || *s.value != *v + s.offset) return fail(i, "value is not reference + offset");
        break;
      }
      case StepRule::Logical:
        if (s.value) return fail(i, "logical step carries a number");
        break;
    }
  }
  return true;
}

AsphericityReport asphericity_report(const ClassificationReport& classification,
                                     const SymplecticnessResult& symplectic) {
  AsphericityReport report;
  const bool certified = classification.completely_solvable_certificate.has_value();
  if (!classification.is_nilpotent && !certified) {
    report.explanation = classification.is_solvable
                             ? "no certificate of complete solvability (" + classification.certificate_note +
                                   "); the completely solvable hypothesis is not established"
                             : "the algebra is not solvable; no solvmanifold criterion applies";
    return report;
  }
  if (!symplectic.is_cohomologically_symplectic) {
    report.explanation = "no degree-2 class has nonzero top power; the manifold is not cohomologically symplectic";
    return report;
  }

  DerivationStep manifold;
  manifold.key = "aspherical-manifold";
  if (classification.is_nilpotent) {
    manifold.statement = "the nilmanifold N/Γ is closed and aspherical";
    manifold.citation =
        "a simply connected nilpotent Lie group is diffeomorphic to R^n; rational structure constants give a "
        "lattice (Malcev); manifolds covered by R^n are aspherical";
  } else {
    manifold.statement = "the solvmanifold G/Γ is closed and aspherical";
    manifold.citation =
        "a completely solvable simply connected Lie group (certified by a rational flag of ideals) is "
        "diffeomorphic to R^n; the co-compact lattice is a hypothesis, not certified";
  }
  report.steps.push_back(manifold);

  DerivationStep pi2;
  pi2.key = "pi2-vanishes";
  pi2.statement = "π₂ = 0";
  pi2.citation = "aspherical: π_i = 0 for all i > 1";
  pi2.hypothesis_refs = {0};
  report.steps.push_back(pi2);

  DerivationStep omega;
  omega.key = "symplectically-aspherical";
  omega.statement = "[ω]|π₂ = 0 for the class with [ω]^" + std::to_string(symplectic.half_dim) +
                    " ≠ 0: symplectically aspherical";
  omega.citation =
      "a closed cohomologically symplectic nilmanifold (or completely solvable solvmanifold) is symplectic "
      "via homogeneous representatives and symplectically aspherical; in general (M,ω) is symplectically "
      "aspherical iff [ω] lies in the image of f*: H²(K(π₁M,1)) → H²(M), and here M is itself a K(π,1)";
  omega.hypothesis_refs = {1};
  report.steps.push_back(omega);

  report.verdict = Asphericity::Aspherical;
  report.explanation = classification.is_nilpotent ? "nilpotent and cohomologically symplectic"
                                                   : "certified completely solvable and cohomologically symplectic";
  return report;
}

std::size_t cat_of_nilmanifold(const LieAlgebra& a, const ClassificationReport& classification) {
  if (!classification.is_nilpotent && !classification.completely_solvable_certificate)
    throw HypothesisError("cat = dim needs a closed aspherical manifold: '" + a.name() +
                          "' is neither nilpotent nor certified completely solvable");
  return a.dim();
}

std::size_t cat_of_nilmanifold(const LieAlgebra& a) { return cat_of_nilmanifold(a, classify(a)); }

SwgtChain swgt_chain(long m, long fiber_n, const std::string& total_space) {
  if (m < 1) throw InputError("swgt_chain: m must be at least 1");
  if (fiber_n < 0) throw InputError("swgt_chain: fiber dimension must be non-negative");
  SwgtChain chain;
  auto& steps = chain.steps;

  DerivationStep omega;
  omega.key = "swgt-omega";
  omega.statement = "swgt[ω] ≥ 2";
  omega.citation = "a real class vanishing on π₂ has strict category weight ≥ 2";
  omega.rule = StepRule::Given;
  omega.value = 2;
  steps.push_back(omega);

  DerivationStep power;
  power.key = "swgt-omega-power";
  power.statement = "swgt(p*[ω]^" + str(m) + ") ≥ swgt([ω]^" + str(m) + ") ≥ " + str(m) + "·swgt[ω] ≥ " + str(2 * m);
  power.citation = "swgt f*u ≥ swgt u; swgt(uv) ≥ swgt u + swgt v";
  power.hypothesis_refs = {0};
  power.rule = StepRule::Scale;
  power.factor = m;
  power.value = 2 * m;
  steps.push_back(power);
  std::size_t last = 1;

  if (fiber_n > 0) {
    DerivationStep v;
    v.key = "swgt-fiber-class";
    v.statement = "swgt v ≥ 1 for the class v ∈ H²(" + total_space + ") restricting to a generator of H²(CP^" +
                  str(fiber_n) + ")";
    v.citation = "swgt u ≥ 1 when deg u > 0; v exists because the real Serre spectral sequence collapses";
    v.rule = StepRule::Given;
    v.value = 1;
    steps.push_back(v);

    DerivationStep vn;
    vn.key = "swgt-fiber-power";
    vn.statement = "swgt(v^" + str(fiber_n) + ") ≥ " + str(fiber_n);
    vn.citation = "swgt(uv) ≥ swgt u + swgt v";
    vn.hypothesis_refs = {2};
    vn.rule = StepRule::Scale;
    vn.factor = fiber_n;
    vn.value = fiber_n;
    steps.push_back(vn);

    DerivationStep product;
    product.key = "swgt-product";
    product.statement = "swgt((p*[ω])^" + str(m) + " v^" + str(fiber_n) + ") ≥ swgt(p*[ω]^" + str(m) +
                        ") + swgt(v^" + str(fiber_n) + ") ≥ " + str(2 * m + fiber_n);
    product.citation = "swgt(uv) ≥ swgt u + swgt v";
    product.hypothesis_refs = {1, 3};
    product.rule = StepRule::Sum;
    product.value = 2 * m + fiber_n;
    steps.push_back(product);
    last = 4;
  }

  DerivationStep cat;
  cat.key = "cat-total-space";
  cat.statement = "cat(" + total_space + ") ≥ " + str(2 * m + fiber_n) + " = 2m + n with m = " + str(m) +
                  ", n = " + str(fiber_n);
  cat.citation =
      "cat X ≥ swgt u for u ≠ 0; (p*[ω])^m v^n ≠ 0 by Leray–Hirsch for a CP^n-fibration over a closed "
      "symplectically aspherical M^{2m}";
  cat.hypothesis_refs = {last};
  cat.rule = StepRule::Follows;
  cat.value = 2 * m + fiber_n;
  steps.push_back(cat);

  chain.cat_total_space_bound = 2 * m + fiber_n;
  return chain;
}

OrbitBounds orbit_bounds(long m, long cl, bool aspherical) {
  if (m < 1) throw InputError("orbit_bounds: m must be at least 1");
  if (cl < 1 || cl > 2 * m)
    throw InputError("orbit_bounds: cup-length " + str(cl) + " outside 1.." + str(2 * m));
  OrbitBounds out;
  auto& steps = out.steps;

  DerivationStep base;
  base.key = "cl-base";
  base.statement = "cl(M) = " + str(cl);
  base.citation = "computed cup-length of the cohomology ring";
  base.rule = StepRule::Given;
  base.value = cl;
  steps.push_back(base);

  DerivationStep fiber;
  fiber.key = "cl-fiber";
  fiber.statement = "cl(CP^" + str(m - 1) + ") = " + str(m - 1);
  fiber.citation = "H*(CP^k) = R[v]/(v^{k+1})";
  fiber.rule = StepRule::Given;
  fiber.value = m - 1;
  steps.push_back(fiber);

  DerivationStep cat;
  cat.key = "cat-sigma-cl";
  cat.statement = "cat(Σ/S¹) ≥ cl(Σ/S¹) ≥ cl M + cl(CP^" + str(m - 1) + ") = " + str(cl + m - 1);
  cat.citation = "cat ≥ cl; Σ/S¹ → M is a bundle with fiber S^{2m-1}/S¹ = CP^{m-1}";
  cat.hypothesis_refs = {0, 1};
  cat.rule = StepRule::Sum;
  cat.value = cl + m - 1;
  steps.push_back(cat);

  DerivationStep kerman;
  kerman.key = "orbits-kerman";
  kerman.statement = "closed trajectories ≥ 1 + cat(Σ/S¹) ≥ m + cl M = " + str(m + cl);
  kerman.citation = "Kerman: a metric Hamiltonian has at least 1 + cat(Σ/S¹) periodic trajectories on each "
                    "sufficiently low energy level";
  kerman.hypothesis_refs = {2};
  kerman.rule = StepRule::Follows;
  kerman.offset = 1;
  kerman.value = m + cl;
  steps.push_back(kerman);
  out.kerman = m + cl;

  if (aspherical) {
    append_steps(steps, swgt_chain(m, m - 1, "Σ/S¹").steps);
    DerivationStep bound;
    bound.key = "orbits-aspherical";
    bound.statement = "closed trajectories ≥ 1 + cat(Σ/S¹) ≥ 1 + (3m - 1) = " + str(3 * m);
    bound.citation = "Kerman's count 1 + cat(Σ/S¹) with the strict category weight bound for [ω] aspherical";
    bound.hypothesis_refs = {steps.size() - 1};
    bound.rule = StepRule::Follows;
    bound.offset = 1;
    bound.value = 3 * m;
    steps.push_back(bound);
    out.aspherical = 3 * m;
    out.stronger = 3 * m > m + cl ? StrongerBound::Aspherical
                                   : (3 * m == m + cl ? StrongerBound::Tie : StrongerBound::Kerman);
  }
  return out;
}

BoundsReport full_report(const LieAlgebra& a) {
  const ValidationReport validation = validate(a);
  if (!validation.ok()) {
    const auto& v = *validation.violation;
    throw InputError("Jacobi identity fails at (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
                     std::to_string(v.k + 1) + ")");
  }
  BoundsReport report;
  report.algebra_name = a.name();
  report.manifold_dim = a.dim();
  report.classification = classify(a);
  report.ring = std::make_shared<const CohomologyRing>(build_complex(a));
  report.cup = cup_length(*report.ring);
  report.cl = report.cup.cl;

  DerivationStep cl_step;
  cl_step.key = "cup-length";
  cl_step.statement = "cl = " + std::to_string(report.cl);
  cl_step.citation = "span recursion over products of representative classes";
  cl_step.rule = StepRule::Given;
  cl_step.value = static_cast<long>(report.cl);
  report.steps.push_back(cl_step);

  try {
    report.cat_manifold = cat_of_nilmanifold(a, report.classification);
    DerivationStep cat;
    cat.key = "cat-manifold";
    cat.statement = "cat = dim = " + std::to_string(a.dim());
    cat.citation = "cat V = dim V for any closed aspherical manifold V (Eilenberg–Ganea); cat(point) = 0";
    cat.rule = StepRule::Given;
    cat.value = static_cast<long>(a.dim());
    report.steps.push_back(cat);
  } catch (const HypothesisError& e) {
    report.cat_note = e.what();
  }

  if (a.dim() % 2 != 0) {
    report.asphericity_note = "odd dimension: no symplectic structure";
    report.orbit_note = "odd dimension: no symplectic magnetic flow";
    return report;
  }

  report.symplectic = is_cohomologically_symplectic(*report.ring);
  AsphericityReport asph = asphericity_report(report.classification, *report.symplectic);
  report.aspherical = asph.verdict;
  report.asphericity_note = asph.explanation;
  append_steps(report.steps, std::move(asph.steps));

  if (!report.symplectic->is_cohomologically_symplectic) {
    report.orbit_note = "not cohomologically symplectic: orbit bounds need a symplectic form";
    return report;
  }

  const long m = static_cast<long>(a.dim() / 2);
  const bool aspherical = report.aspherical == Asphericity::Aspherical;
  OrbitBounds orbits = orbit_bounds(m, static_cast<long>(report.cl), aspherical);
  report.orbit_bound_kerman = orbits.kerman;
  report.orbit_bound_aspherical = orbits.aspherical;
  report.stronger = orbits.stronger;
  if (aspherical) {
    report.swgt_omega = 2;
    report.cat_total_space_bound = 2 * m + (m - 1);
  } else {
    report.orbit_note = "symplectic asphericity not established: only the cup-length bound applies";
  }
  append_steps(report.steps, std::move(orbits.steps));
  return report;
}

}  // namespace nilcoh
