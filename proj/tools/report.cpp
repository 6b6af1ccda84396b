#include "report.hpp"

#include <json.hpp>

#include "class_expression.hpp"

namespace nilcoh::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<std::size_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string superscript(std::size_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char ch : s) out += digits[ch - '0'];
  return out;
}

std::string vector_expression(const RatVector& v) {
  ExteriorElement u(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) u.add_term(Monomial::generator(k), v[k]);
  return render_element(u);
}

Json class_json(const CohomologyRing& ring, const CohClass& c) {
  Json j;
  j["degree"] = c.degree;
  j["class"] = render_class(ring, c);
  j["form"] = render_element(ring.form(c));
  return j;
}

const char* rule_name(StepRule rule) {
  switch (rule) {
    case StepRule::Given: return "given";
    case StepRule::Scale: return "scale";
    case StepRule::Sum: return "sum";
    case StepRule::Follows: return "follows";
    case StepRule::Logical: return "logical";
  }
  return "logical";
}

const char* stronger_name(StrongerBound s) {
  switch (s) {
    case StrongerBound::Kerman: return "kerman";
    case StrongerBound::Aspherical: return "aspherical";
    case StrongerBound::Tie: return "tie";
  }
  return "tie";
}

std::string orbit_line(const BoundsReport& r) {
  if (!r.orbit_bound_kerman) return "orbit bounds: n/a (" + r.orbit_note + ")";
  std::string line = "orbit bounds: Kerman m+cl = " + std::to_string(*r.orbit_bound_kerman);
  if (!r.orbit_bound_aspherical) return line + "; aspherical bound not established";
  line += "; aspherical 3m = " + std::to_string(*r.orbit_bound_aspherical);
  switch (*r.stronger) {
    case StrongerBound::Aspherical: return line + " (stronger)";
    case StrongerBound::Tie: return line + " (tie)";
    case StrongerBound::Kerman: return line + " (Kerman stronger)";
  }
  return line;
}

}  // namespace

std::string describe_violation(const JacobiViolation& v, std::size_t dim) {
  ExteriorElement jac(dim);
  for (std::size_t k = 0; k < dim; ++k)
    if (v.jacobiator[k] != 0) jac.add_term(Monomial::generator(k), v.jacobiator[k]);
  return "Jacobi identity fails at (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
         std::to_string(v.k + 1) + "): jacobiator = " + render_element(jac);
}

std::string describe_product(const CohomologyRing& ring, const std::vector<CohClass>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "·";
    out += render_class(ring, f);
  }
  return out;
}

std::string describe_verdict(const CohomologyRing& ring, const ClassVerdict& verdict) {
  const std::string power = "ω" + superscript(ring.dim() / 2);
  if (!verdict.closed) return "not closed, dω = " + render_element(verdict.differential) + ": not symplectic";
  if (verdict.exact) return "closed, exact: not symplectic";
  if (!verdict.symplectic) return "closed, non-exact, " + power + " = 0: not symplectic";
  return "closed, non-exact, " + power + " = " + render_class(ring, *verdict.top_power) + " ≠ 0: symplectic";
}

void write_check(std::ostream& out, Format format, const LieAlgebra& a, const ClassificationReport& r) {
  std::vector<std::string> flag;
  if (r.completely_solvable_certificate)
    for (const auto& g : r.completely_solvable_certificate->generators) flag.push_back(vector_expression(g));
  if (format == Format::Json) {
    Json j;
    j["algebra"] = a.name();
    j["dim"] = a.dim();
    j["valid"] = true;
    j["abelian"] = r.is_abelian;
    j["nilpotent"] = r.is_nilpotent;
    j["lower_central_series"] = r.lower_central_series;
    j["solvable"] = r.is_solvable;
    j["derived_series"] = r.derived_series;
    j["real_spectrum_on_basis"] = r.real_spectrum_on_basis;
    j["completely_solvable_certificate"] = r.completely_solvable_certificate ? Json(flag) : Json(nullptr);
    if (!r.certificate_note.empty()) j["certificate_note"] = r.certificate_note;
    out << j.dump(2) << "\n";
    return;
  }
  out << "algebra: " << a.name() << "\n";
  out << "dim: " << a.dim() << "\n";
  out << "jacobi: ok\n";
  out << "abelian: " << yes_no(r.is_abelian) << "\n";
  out << "nilpotent: " << yes_no(r.is_nilpotent) << " (series " << join(r.lower_central_series, ",") << ")\n";
  out << "solvable: " << yes_no(r.is_solvable) << " (derived series " << join(r.derived_series, ",") << ")\n";
  out << "real spectrum on basis: " << yes_no(r.real_spectrum_on_basis) << "\n";
  if (r.completely_solvable_certificate) {
    out << "completely solvable: yes, flag of ideals spanned successively by";
    for (std::size_t i = 0; i < flag.size(); ++i) out << (i ? ", " : " ") << flag[i];
    out << "\n";
  } else {
    out << "completely solvable: not certified (" << r.certificate_note << ")\n";
  }
}

void write_cohomology(std::ostream& out, Format format, const CohomologySummary& s, bool reps) {
  std::vector<std::size_t> betti;
  for (const auto& d : s.degrees) betti.push_back(d.betti);
  if (format == Format::Json) {
    Json j;
    j["algebra"] = s.algebra_name;
    j["dim"] = s.dim;
    j["betti"] = betti;
    j["euler_characteristic"] = s.euler_characteristic ? Json(*s.euler_characteristic) : Json(nullptr);
    j["poincare_duality"] = s.poincare_duality ? Json(*s.poincare_duality) : Json(nullptr);
    if (reps) {
      Json all = Json::array();
      for (const auto& d : s.degrees) {
        Json list = Json::array();
        for (const auto& r : d.representatives) list.push_back(render_element(r));
        all.push_back(list);
      }
      j["representatives"] = all;
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "betti: " << join(betti, " ") << "\n";
  if (s.euler_characteristic)
    out << "euler characteristic: " << *s.euler_characteristic << "\n";
  else
    out << "euler characteristic: n/a (degrees above " << s.degrees.size() - 1 << " not computed)\n";
  if (s.poincare_duality)
    out << "poincare duality: " << (*s.poincare_duality ? "holds" : "fails") << "\n";
  else
    out << "poincare duality: n/a (degrees above " << s.degrees.size() - 1 << " not computed)\n";
  if (reps) {
    for (const auto& d : s.degrees) {
      out << "H^" << d.degree << ":";
      for (std::size_t i = 0; i < d.representatives.size(); ++i)
        out << (i ? ", " : " ") << "[" << render_element(d.representatives[i]) << "]";
      out << "\n";
    }
  }
}

void write_cup_length(std::ostream& out, Format format, const CohomologyRing& ring, const CupLengthResult& r) {
  if (format == Format::Json) {
    Json j;
    j["algebra"] = ring.complex().algebra().name();
    j["cl"] = r.cl;
    Json witness = Json::array();
    for (const auto& c : r.witness) witness.push_back(class_json(ring, c));
    j["witness"] = witness;
    j["spans_by_stage"] = r.spans_by_stage;
    out << j.dump(2) << "\n";
    return;
  }
  out << "cl = " << r.cl;
  if (!r.witness.empty()) out << ", witness: " << describe_product(ring, r.witness);
  out << "\n";
  out << "spans by stage: " << join(r.spans_by_stage, " ") << "\n";
}

void write_symplectic(std::ostream& out, Format format, const CohomologyRing& ring, const SymplecticnessResult& r,
                      bool witness, const std::optional<VerifyQuery>& verify) {
  if (format == Format::Json) {
    Json j;
    j["algebra"] = ring.complex().algebra().name();
    j["dim"] = ring.dim();
    j["cohomologically_symplectic"] = r.is_cohomologically_symplectic;
    if (witness) {
      j["witness"] = r.witness ? class_json(ring, *r.witness) : Json(nullptr);
      j["top_power"] = r.top_power ? class_json(ring, *r.top_power) : Json(nullptr);
    }
    if (verify) {
      Json v;
      v["expression"] = verify->expression;
      v["closed"] = verify->verdict.closed;
      v["differential"] = render_element(verify->verdict.differential);
      v["exact"] = verify->verdict.exact;
      v["top_power"] = verify->verdict.top_power ? class_json(ring, *verify->verdict.top_power) : Json(nullptr);
      v["symplectic"] = verify->verdict.symplectic;
      v["summary"] = describe_verdict(ring, verify->verdict);
      j["verify"] = v;
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "cohomologically symplectic: " << yes_no(r.is_cohomologically_symplectic) << "\n";
  if (witness && r.witness) {
    out << "witness: ω = " << render_class(ring, *r.witness) << ", ω" << superscript(r.half_dim) << " = "
        << render_class(ring, *r.top_power) << "\n";
    out << "witness form: " << render_element(ring.form(*r.witness)) << "\n";
  }
  if (verify) out << describe_verdict(ring, verify->verdict) << "\n";
}

void write_bounds(std::ostream& out, Format format, const BoundsReport& r) {
  const auto& ring = *r.ring;
  if (format == Format::Json) {
    Json j;
    j["algebra"] = r.algebra_name;
    j["manifold_dim"] = r.manifold_dim;
    j["betti"] = ring.betti_numbers();
    j["nilpotent"] = r.classification.is_nilpotent;
    j["cl"] = r.cl;
    Json witness = Json::array();
    for (const auto& c : r.cup.witness) witness.push_back(class_json(ring, c));
    j["cl_witness"] = witness;
    j["cat_manifold"] = r.cat_manifold ? Json(*r.cat_manifold) : Json(nullptr);
    j["cat_convention"] = "cat(point) = 0";
    if (r.symplectic) {
      j["cohomologically_symplectic"] = r.symplectic->is_cohomologically_symplectic;
      j["symplectic_witness"] = r.symplectic->witness ? class_json(ring, *r.symplectic->witness) : Json(nullptr);
    }
    j["aspherical"] = r.aspherical == Asphericity::Aspherical ? "true" : "indeterminate";
    j["asphericity_note"] = r.asphericity_note;
    j["swgt_omega"] = r.swgt_omega ? Json(*r.swgt_omega) : Json(nullptr);
    j["cat_total_space_bound"] = r.cat_total_space_bound ? Json(*r.cat_total_space_bound) : Json(nullptr);
    j["orbit_bound_kerman"] = r.orbit_bound_kerman ? Json(*r.orbit_bound_kerman) : Json(nullptr);
    j["orbit_bound_aspherical"] = r.orbit_bound_aspherical ? Json(*r.orbit_bound_aspherical) : Json(nullptr);
    j["stronger"] = r.stronger ? Json(stronger_name(*r.stronger)) : Json(nullptr);
    Json steps = Json::array();
    for (const auto& s : r.steps) {
      Json step;
      step["key"] = s.key;
      step["statement"] = s.statement;
      step["citation"] = s.citation;
      step["refs"] = s.hypothesis_refs;
      step["rule"] = rule_name(s.rule);
      step["value"] = s.value ? Json(*s.value) : Json(nullptr);
      steps.push_back(step);
    }
    j["steps"] = steps;
    j["steps_checked"] = check_derivation(r.steps);
    out << j.dump(2) << "\n";
    return;
  }
  out << "algebra: " << r.algebra_name << " (dim " << r.manifold_dim << ")\n";
  out << "betti: " << join(ring.betti_numbers(), " ") << "\n";
  out << "cl = " << r.cl;
  if (!r.cup.witness.empty()) out << ", witness: " << describe_product(ring, r.cup.witness);
  out << "\n";
  if (r.cat_manifold)
    out << "cat = " << *r.cat_manifold << " (convention cat(point) = 0)\n";
  else
    out << "cat: not determined (" << r.cat_note << ")\n";
  if (r.symplectic) {
    out << "cohomologically symplectic: " << yes_no(r.symplectic->is_cohomologically_symplectic);
    if (r.symplectic->witness) out << ", ω = " << render_class(ring, *r.symplectic->witness);
    out << "\n";
  }
  out << "symplectically aspherical: "
      << (r.aspherical == Asphericity::Aspherical ? "yes" : "indeterminate") << " (" << r.asphericity_note << ")\n";
  if (!r.steps.empty()) {
    out << "derivation:\n";
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      const auto& s = r.steps[i];
      out << "  [" << i << "] " << s.statement;
      if (!s.hypothesis_refs.empty()) {
        out << "  (from";
        for (auto ref : s.hypothesis_refs) out << " [" << ref << "]";
        out << ")";
      }
      out << "\n      by: " << s.citation << "\n";
    }
    std::string why;
    out << "derivation check: " << (check_derivation(r.steps, &why) ? "ok" : "FAILED, " + why) << "\n";
  }
  out << orbit_line(r) << "\n";
}

void write_algebra(std::ostream& out, Format format, const LieAlgebra& a) {
  if (format == Format::Json) {
    Json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    Json brackets = Json::array();
    for (const auto& sc : a.structure_constants())
      brackets.push_back({{"i", sc.i + 1}, {"j", sc.j + 1}, {"k", sc.k + 1}, {"c", to_string(sc.value)}});
    j["brackets"] = brackets;
    out << j.dump(2) << "\n";
    return;
  }
  out << "name: " << a.name() << "\n";
  out << "dim: " << a.dim() << "\n";
  if (a.is_abelian()) {
    out << "brackets: none\n";
    return;
  }
  out << "brackets:\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!is_zero(a.bracket(i, j)))
        out << "  [e" << i + 1 << ",e" << j + 1 << "] = " << vector_expression(a.bracket(i, j)) << "\n";
}

}  // namespace nilcoh::cli
