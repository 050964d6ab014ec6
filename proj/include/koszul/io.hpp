#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "koszul/classes.hpp"
#include "koszul/cohomology.hpp"
#include "koszul/koszul.hpp"
#include "koszul/lie_algebra.hpp"
#include "koszul/relative.hpp"

namespace koszul::io {

using json = nlohmann::ordered_json;

/// Reads a whole file. Errors: IoError (input).
std::string read_file(const std::filesystem::path& path);
/// Parses JSON text; failures become ParseError with the byte position.
json parse_json(const std::string& text, const std::string& source);

/// Unvalidated contents of an algebra file.
struct RawAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<StructureEntry> entries;
};

RawAlgebra raw_algebra_from_json(const json& j);
LieAlgebra algebra_from_json(const json& j);
/// { "dim", "basis", "brackets": [[i, j, k, "p/q"], ...] } with i < j.
json algebra_to_json(const LieAlgebra& g);

std::vector<Vector> vectors_from_json(const json& j, std::size_t dim);
json vectors_to_json(const std::vector<Vector>& vectors);

json scalar_to_json(const Scalar& s);
/// Accepts "p/q" strings and integers.
Scalar scalar_from_json(const json& j);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json violation_to_json(const Violation& v);

json form_to_json(const Form& f);
Form form_from_json(const json& j, std::size_t ambient_dim);

json betti_to_json(const std::vector<std::size_t>& betti);
/// `bases` maps chain coordinates into the exterior basis (empty for the full exterior algebra).
json cohomology_to_json(const CohomologySpace& space, std::size_t ambient_dim, const std::vector<Matrix>& bases = {});
json complex_to_json(const CochainComplex& c, const std::vector<Matrix>& embedding = {});
json cohomology_map_to_json(const CohomologyMap& m);

json koszul_result_to_json(const PairContext& context, const KoszulResult& result, bool with_map, bool with_kernel);
json generator_report_to_json(const GeneratorReport& report);

/// Morphism file: { "source": {"algebra": A, "sub": S}, "target": {...}, "matrix": rows }.
/// A is a builtin string like "gl:2" or an inline algebra object; S is a sub-spec string
/// (for builtins) or { "vectors": [...] }. The matrix is dim target x dim source.
PairMorphism morphism_from_json(const json& j);

}  // namespace koszul::io
