#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "algebra_file.hpp"
#include "class_expression.hpp"
#include "nilcoh/bounds.hpp"
#include "nilcoh/catalog.hpp"
#include "nilcoh/ce_complex.hpp"
#include "nilcoh/errors.hpp"
#include "report.hpp"

namespace nilcoh::cli {

namespace {

constexpr const char* kCatalogPrefix = "catalog:";

struct Failure {
  int code;
  std::string message;
};

LieAlgebra load(const std::string& source) {
  try {
    if (source.starts_with(kCatalogPrefix)) return catalog::lookup(source.substr(std::string(kCatalogPrefix).size()));
    return read_algebra_file(source);
  } catch (const LookupError& e) {
    throw Failure{kUsage, e.what()};
  } catch (const InputError& e) {
    throw Failure{kUsage, e.what()};
  }
}

LieAlgebra load_valid(const std::string& source) {
  LieAlgebra a = load(source);
  const ValidationReport v = validate(a);
  if (!v.ok()) throw Failure{kInvalidAlgebra, describe_violation(*v.violation, a.dim())};
  return a;
}

void require_even(const LieAlgebra& a, const std::string& command) {
  if (a.dim() % 2 != 0)
    throw Failure{kUnsupported, command + " needs an even-dimensional algebra; '" + a.name() + "' has dimension " +
                                    std::to_string(a.dim())};
}

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Text; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology, cup-length and closed-orbit bounds for nilpotent and solvable Lie algebras",
               "nilcoh"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string source;
  std::string format = "text";
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("source", source, "algebra file (JSON) or catalog:NAME")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* check = app.add_subcommand("check", "validate an algebra and classify it");
  add_source(check);

  int max_degree = -1;
  bool reps = false;
  auto* cohomology_cmd = app.add_subcommand("cohomology", "Betti numbers and representatives");
  add_source(cohomology_cmd);
  cohomology_cmd->add_option("--max-degree", max_degree, "highest degree to compute")->check(CLI::NonNegativeNumber);
  cohomology_cmd->add_flag("--reps", reps, "print representative cocycles");

  auto* cup = app.add_subcommand("cup-length", "cup-length with a witness product");
  add_source(cup);

  bool witness = false;
  std::string verify_expr;
  auto* symplectic = app.add_subcommand("symplectic", "decide cohomological symplecticness");
  add_source(symplectic);
  symplectic->add_flag("--witness", witness, "print a class with nonzero top power");
  auto* verify_opt = symplectic->add_option("--verify", verify_expr, "check a 2-form such as \"e1^e4 + e2^e3\"");

  auto* bounds = app.add_subcommand("bounds", "full report with derivation steps and orbit bounds");
  add_source(bounds);

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in algebras");
  catalog_cmd->require_subcommand(1);
  std::string catalog_name, export_path;
  auto* list = catalog_cmd->add_subcommand("list", "list catalog names");
  auto* show = catalog_cmd->add_subcommand("show", "print an algebra");
  show->add_option("name", catalog_name)->required();
  show->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  auto* exp = catalog_cmd->add_subcommand("export", "write an algebra file ('-' for standard output)");
  exp->add_option("name", catalog_name)->required();
  exp->add_option("file", export_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Format fmt = parse_format(format);
  try {
    if (check->parsed()) {
      const LieAlgebra a = load_valid(source);
      write_check(out, fmt, a, classify(a));
    } else if (cohomology_cmd->parsed()) {
      const LieAlgebra a = load_valid(source);
      const std::size_t top = max_degree < 0 ? a.dim() : std::min<std::size_t>(max_degree, a.dim());
      const CEComplex complex = build_complex(a, top);
      CohomologySummary summary;
      summary.algebra_name = a.name();
      summary.dim = a.dim();
      for (std::size_t k = 0; k <= top; ++k) summary.degrees.push_back(cohomology(complex, k));
      if (top == a.dim()) {
        long chi = 0;
        bool duality = true;
        for (std::size_t k = 0; k <= top; ++k) {
          const long b = static_cast<long>(summary.degrees[k].betti);
          chi += k % 2 == 0 ? b : -b;
          duality = duality && summary.degrees[k].betti == summary.degrees[top - k].betti;
        }
        summary.euler_characteristic = chi;
        summary.poincare_duality = duality;
      }
      write_cohomology(out, fmt, summary, reps);
    } else if (cup->parsed()) {
      const LieAlgebra a = load_valid(source);
      const CohomologyRing ring(build_complex(a));
      write_cup_length(out, fmt, ring, cup_length(ring));
    } else if (symplectic->parsed()) {
      const LieAlgebra a = load_valid(source);
      require_even(a, "symplectic");
      std::optional<ExteriorElement> omega;
      if (verify_opt->count() > 0) {
        try {
          omega = parse_class_expression(verify_expr, a.dim());
        } catch (const ParseError& e) {
          throw Failure{kUsage, "--verify: " + std::string(e.what())};
        }
        const auto degree = omega->degree();
        if (!omega->is_zero() && degree != 2u)
          throw Failure{kUsage, "--verify: expected a 2-form, got degree " + std::to_string(degree.value_or(0))};
      }
      const CohomologyRing ring(build_complex(a));
      std::optional<VerifyQuery> query;
      if (omega) query = VerifyQuery{verify_expr, verify_class(ring, *omega)};
      write_symplectic(out, fmt, ring, is_cohomologically_symplectic(ring), witness, query);
    } else if (bounds->parsed()) {
      const LieAlgebra a = load_valid(source);
      require_even(a, "bounds");
      write_bounds(out, fmt, full_report(a));
    } else if (list->parsed()) {
      for (const auto& name : catalog::names()) out << name << "\n";
    } else if (show->parsed()) {
      write_algebra(out, fmt, load(kCatalogPrefix + catalog_name));
    } else if (exp->parsed()) {
      const std::string text = serialize_algebra(load(kCatalogPrefix + catalog_name));
      if (export_path == "-") {
        out << text;
      } else {
        std::ofstream file(export_path, std::ios::binary);
        if (!(file << text)) throw Failure{kUsage, "cannot write '" + export_path + "'"};
      }
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace nilcoh::cli
