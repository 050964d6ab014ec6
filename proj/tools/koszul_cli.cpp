// koszul: command-line front end. Every command prints one JSON document on stdout.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "koszul/builtins.hpp"
#include "koszul/classes.hpp"
#include "koszul/error.hpp"
#include "koszul/io.hpp"
#include "koszul/koszul.hpp"
#include "koszul/parallel.hpp"
#include "koszul/relative.hpp"

using namespace koszul;
using io::json;

namespace {

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct AlgebraSpec {
  std::string builtin;
  std::string file;

  bool given() const { return !builtin.empty() || !file.empty(); }
};

struct Loaded {
  std::optional<BuiltinRef> ref;
  std::string text;  // file contents, or the builtin reference
  json input;        // digest record for the report
};

Loaded load_spec(const AlgebraSpec& spec, const char* what) {
  if (spec.builtin.empty() == spec.file.empty())
    throw input_error("UsageError", std::string("give exactly one of ") + what);
  Loaded out;
  if (!spec.builtin.empty()) {
    out.ref = BuiltinRef::parse(spec.builtin);
    out.text = "builtin:" + out.ref->to_string();
    out.input = json{{"builtin", out.ref->to_string()}, {"digest", fnv1a(out.text)}};
  } else {
    out.text = io::read_file(spec.file);
    out.input = json{{"file", spec.file}, {"digest", fnv1a(out.text)}};
  }
  return out;
}

LieAlgebra algebra_of(const Loaded& l, const std::string& source) {
  if (l.ref) return builtin(*l.ref);
  return io::algebra_from_json(io::parse_json(l.text, source));
}

struct SubSpec {
  std::string spec;
  std::string file;
};

SubalgebraPair resolve_pair(const Loaded& l, const LieAlgebra& g, const SubSpec& sub, json& inputs) {
  if (!sub.spec.empty() && !sub.file.empty()) throw input_error("UsageError", "give at most one of --sub and --sub-file");
  if (!sub.file.empty()) {
    const std::string text = io::read_file(sub.file);
    inputs["sub"] = json{{"file", sub.file}, {"digest", fnv1a(text)}};
    const json j = io::parse_json(text, sub.file);
    if (!j.contains("vectors")) throw input_error("ParseError", sub.file + ": missing field \"vectors\"");
    std::optional<std::vector<Vector>> complement;
    if (j.contains("complement")) complement = io::vectors_from_json(j.at("complement"), g.dim());
    return make_subalgebra(g, io::vectors_from_json(j.at("vectors"), g.dim()), complement);
  }
  const std::string s = sub.spec.empty() ? "zero" : sub.spec;
  inputs["sub"] = json{{"spec", s}};
  if (l.ref) return canonical_subalgebra(*l.ref, s);
  if (s == "zero") return zero_subalgebra(g);
  if (s == "full") return full_subalgebra(g);
  throw input_error("UsageError", "sub-spec \"" + s + "\" needs --builtin; use --sub-file for algebra files");
}

int exit_code(ErrorCategory c) { return static_cast<int>(c); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chevalley-Eilenberg and relative Lie algebra cohomology, and the Koszul homomorphism"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads for per-degree work (default: KOSZUL_THREADS or 1)");

  AlgebraSpec algebra;
  AlgebraSpec other;
  SubSpec sub;
  std::string morphism_file;
  bool with_matrix = false, with_kernel = false, factor_check = false, representatives = false;

  const auto add_algebra = [&](CLI::App* c) {
    c->add_option("--builtin", algebra.builtin, "Builtin algebra, e.g. gl:3, so:5, heisenberg:3");
    c->add_option("--file", algebra.file, "Algebra JSON file");
  };
  const auto add_sub = [&](CLI::App* c, bool relative_alias) {
    c->add_option("--sub", sub.spec, "Sub-spec: zero, full, center, or a block-embedded builtin like so:3");
    if (relative_alias) c->add_option("--relative", sub.spec, "Same as --sub");
    c->add_option("--sub-file", sub.file, "Subalgebra JSON file {\"vectors\": [...], \"complement\": [...]}");
  };

  auto* validate = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
  add_algebra(validate);
  auto* exporter = app.add_subcommand("export", "Print the algebra file of an algebra");
  add_algebra(exporter);
  auto* betti = app.add_subcommand("betti", "Betti numbers of H(g), or of H(g, h) with --relative");
  add_algebra(betti);
  add_sub(betti, true);
  betti->add_flag("--representatives", representatives, "Include cocycle representatives");
  auto* relative = app.add_subcommand("relative-betti", "Betti numbers of H(g, h)");
  add_algebra(relative);
  add_sub(relative, true);
  relative->add_flag("--representatives", representatives, "Include cocycle representatives");
  auto* koszul_cmd = app.add_subcommand("koszul", "The induced map H(g, h) -> H(g) and its injectivity");
  add_algebra(koszul_cmd);
  add_sub(koszul_cmd, false);
  koszul_cmd->add_flag("--matrix", with_matrix, "Include per-degree matrices");
  koszul_cmd->add_flag("--kernel", with_kernel, "Include kernel forms on g/h");
  koszul_cmd->add_flag("--factor-check", factor_check, "Recompute through the basic subcomplex");
  auto* ncz_cmd = app.add_subcommand("ncz", "Is h noncohomologous to zero in g");
  add_algebra(ncz_cmd);
  add_sub(ncz_cmd, false);
  auto* reductive = app.add_subcommand("reductive", "Search for an h-invariant complement");
  add_algebra(reductive);
  add_sub(reductive, false);
  auto* classes = app.add_subcommand("classes", "Generators of H(g, h) and the exterior presentation");
  add_algebra(classes);
  add_sub(classes, false);
  auto* functoriality = app.add_subcommand("functoriality", "Check the naturality square of a pair morphism");
  functoriality->add_option("--morphism", morphism_file, "Morphism JSON file")->required();
  auto* direct = app.add_subcommand("direct-product-check", "Check the direct-product law for (g + h, h)");
  add_algebra(direct);
  direct->add_option("--other", other.builtin, "Second factor as a builtin");
  direct->add_option("--other-file", other.file, "Second factor as an algebra file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (threads > 0) set_thread_count(threads);
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    const auto start = std::chrono::steady_clock::now();
    json inputs = json::object();
    json result;
    int status = 0;

    if (name == "functoriality") {
      const std::string text = io::read_file(morphism_file);
      inputs["morphism"] = json{{"file", morphism_file}, {"digest", fnv1a(text)}};
      const PairMorphism m = io::morphism_from_json(io::parse_json(text, morphism_file));
      const FunctorialityReport r = functoriality_check(m);
      result = json{{"commutes", r.commutes},
                    {"composite", io::cohomology_map_to_json(r.right_after_top)},
                    {"quotient_pullback", io::cohomology_map_to_json(r.quotient_pullback)}};
    } else {
      const Loaded loaded = load_spec(algebra, "--builtin, --file");
      inputs["algebra"] = loaded.input;
      const std::string source = algebra.file.empty() ? algebra.builtin : algebra.file;

      if (name == "validate") {
        if (loaded.ref) {
          const LieAlgebra g = builtin(*loaded.ref);
          result = json{{"valid", true}, {"dim", g.dim()}, {"violations", json::array()}};
        } else {
          const io::RawAlgebra raw = io::raw_algebra_from_json(io::parse_json(loaded.text, source));
          const ValidationReport report = validate_structure(raw.dim, raw.entries);
          json violations = json::array();
          for (const auto& v : report.violations) violations.push_back(io::violation_to_json(v));
          result = json{{"valid", report.ok()}, {"dim", raw.dim}, {"violations", std::move(violations)}};
          if (!report.ok()) {
            bool index_error = false;
            for (const auto& v : report.violations) index_error |= v.kind == Violation::Kind::IndexOutOfRange;
            status = index_error ? exit_code(ErrorCategory::Input) : exit_code(ErrorCategory::Validation);
          }
        }
      } else if (name == "export") {
        std::cout << io::algebra_to_json(algebra_of(loaded, source)).dump(2) << "\n";
        return 0;
      } else if (name == "direct-product-check") {
        const Loaded second = load_spec(other, "--other, --other-file");
        inputs["other"] = second.input;
        const LieAlgebra g = algebra_of(loaded, source);
        const LieAlgebra h = algebra_of(second, other.file.empty() ? other.builtin : other.file);
        const DirectProductReport r = direct_product_check(g, h);
        result = json{{"injective", r.injective},
                      {"formula_holds", r.formula_holds},
                      {"horizontal", r.horizontal},
                      {"betti_source", io::betti_to_json(r.betti_source)},
                      {"betti_target", io::betti_to_json(r.betti_target)}};
      } else {
        const LieAlgebra g = algebra_of(loaded, source);
        const bool relative_betti = name == "relative-betti" || (name == "betti" && (!sub.spec.empty() || !sub.file.empty()));
        if (name == "betti" && !relative_betti) {
          const CohomologySpace h = compute_cohomology(exterior_complex(g));
          result = representatives ? io::cohomology_to_json(h, g.dim()) : json{{"betti", io::betti_to_json(h.betti_numbers())}};
          result["euler_characteristic"] = euler_characteristic(h.complex());
        } else {
          const SubalgebraPair pair = resolve_pair(loaded, g, sub, inputs);
          if (relative_betti) {
            const InvariantQuotientComplex q = invariant_quotient_complex(pair);
            const CohomologySpace h = compute_cohomology(q.complex);
            result = representatives ? io::cohomology_to_json(h, pair.quotient_dim(), q.invariants)
                                     : json{{"betti", io::betti_to_json(h.betti_numbers())}};
          } else if (name == "reductive") {
            const ComplementReport r = invariant_complement(pair);
            result = json{{"reductive", r.exists}};
            if (r.exists) {
              std::vector<Vector> cols;
              for (std::size_t c = 0; c < r.complement.cols(); ++c) cols.push_back(r.complement.column(c));
              result["complement"] = io::vectors_to_json(cols);
              result["projection"] = io::matrix_to_json(r.projection);
            } else {
              result["certificate"] = io::vectors_to_json({r.certificate});
            }
          } else if (name == "classes") {
            result = io::generator_report_to_json(identify_generators(pair));
          } else {
            const PairContext context = make_context(pair);
            if (name == "koszul") {
              const KoszulResult r = delta_cohom(context);
              result = io::koszul_result_to_json(context, r, with_matrix, with_kernel);
              if (factor_check) {
                const FactorizationReport f = factorization_check(context, r);
                result["factorization"] = json{{"holds", true}, {"basic_betti", io::betti_to_json(f.basic_betti)}};
              }
            } else if (name == "ncz") {
              const NczReport r = ncz(context);
              result = json{{"ncz", r.ncz}, {"ranks", r.ranks}, {"sub_betti", io::betti_to_json(r.sub_betti)}};
            }
          }
        }
      }
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json report{{"command", name}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"timing", {{"seconds", seconds}}}};
    std::cout << report.dump(2) << "\n";
    return status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code(ErrorCategory::Internal);
  }
}
