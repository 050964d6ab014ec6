#include "koszul/io.hpp"

#include <fstream>
#include <sstream>

#include "koszul/builtins.hpp"
#include "koszul/error.hpp"

namespace koszul::io {

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw input_error("ParseError", where + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::size_t as_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw input_error("ParseError", where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

SubalgebraPair pair_from_json(const json& j, const std::string& where) {
  const json& a = require(j, "algebra", where);
  const json sub = j.contains("sub") ? j.at("sub") : json("zero");
  if (a.is_string()) {
    const BuiltinRef ref = BuiltinRef::parse(a.get<std::string>());
    if (sub.is_string()) return canonical_subalgebra(ref, sub.get<std::string>());
    const LieAlgebra g = builtin(ref);
    return make_subalgebra(g, vectors_from_json(require(sub, "vectors", where + ".sub"), g.dim()));
  }
  const LieAlgebra g = algebra_from_json(a);
  if (sub.is_string()) {
    const std::string s = sub.get<std::string>();
    if (s == "zero") return zero_subalgebra(g);
    if (s == "full") return full_subalgebra(g);
    throw input_error("ParseError", where + ": sub-spec \"" + s + "\" needs a builtin algebra");
  }
  return make_subalgebra(g, vectors_from_json(require(sub, "vectors", where + ".sub"), g.dim()));
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("IoError", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("ParseError", source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw input_error("ParseError", "rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw input_error("ParseError", "matrix must be an array of rows");
  std::vector<Vector> rows;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) throw input_error("ParseError", "matrix row " + std::to_string(r) + " is not an array");
    Vector row;
    for (const auto& x : j[r]) row.push_back(scalar_from_json(x));
    if (r == 0) cols = row.size();
    else if (row.size() != cols) throw input_error("ParseError", "matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(cols, rows);
}

RawAlgebra raw_algebra_from_json(const json& j) {
  RawAlgebra out;
  out.dim = as_index(require(j, "dim", "algebra"), "algebra.dim");
  if (j.contains("basis")) {
    for (const auto& name : j.at("basis")) {
      if (!name.is_string()) throw input_error("ParseError", "algebra.basis: names must be strings");
      out.basis.push_back(name.get<std::string>());
    }
    if (out.basis.size() != out.dim) throw input_error("ParseError", "algebra.basis: expected " + std::to_string(out.dim) + " names");
  } else {
    for (std::size_t i = 0; i < out.dim; ++i) out.basis.push_back("e" + std::to_string(i));
  }
  const json& brackets = require(j, "brackets", "algebra");
  if (!brackets.is_array()) throw input_error("ParseError", "algebra.brackets must be an array");
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const json& e = brackets[n];
    const std::string where = "algebra.brackets[" + std::to_string(n) + "]";
    if (!e.is_array() || e.size() != 4) throw input_error("ParseError", where + ": expected [i, j, k, \"p/q\"]");
    out.entries.push_back({as_index(e[0], where), as_index(e[1], where), as_index(e[2], where), scalar_from_json(e[3])});
  }
  return out;
}

LieAlgebra algebra_from_json(const json& j) {
  RawAlgebra raw = raw_algebra_from_json(j);
  return LieAlgebra::from_entries(std::move(raw.basis), raw.entries);
}

json algebra_to_json(const LieAlgebra& g) {
  json brackets = json::array();
  for (const auto& e : g.structure_constants()) brackets.push_back(json::array({e.i, e.j, e.k, scalar_to_json(e.value)}));
  return json{{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", std::move(brackets)}};
}

std::vector<Vector> vectors_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw input_error("ParseError", "vectors must be an array");
  std::vector<Vector> out;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != dim)
      throw input_error("ParseError", "each vector needs " + std::to_string(dim) + " coordinates");
    Vector x;
    for (const auto& c : v) x.push_back(scalar_from_json(c));
    out.push_back(std::move(x));
  }
  return out;
}

json vectors_to_json(const std::vector<Vector>& vectors) {
  json out = json::array();
  for (const auto& v : vectors) {
    json row = json::array();
    for (const auto& c : v) row.push_back(scalar_to_json(c));
    out.push_back(std::move(row));
  }
  return out;
}

json violation_to_json(const Violation& v) {
  return json{{"kind", to_string(v.kind)}, {"indices", v.indices}, {"residual", scalar_to_json(v.residual)}};
}

json form_to_json(const Form& f) {
  json terms = json::array();
  for (const auto& [index, value] : f.terms()) terms.push_back(json::array({index.indices(), scalar_to_json(value)}));
  return json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

Form form_from_json(const json& j, std::size_t ambient_dim) {
  const std::size_t degree = as_index(require(j, "degree", "form"), "form.degree");
  Form f(ambient_dim, degree);
  for (const auto& t : require(j, "terms", "form")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array()) throw input_error("ParseError", "form term must be [[indices], \"p/q\"]");
    std::vector<std::size_t> idx;
    for (const auto& i : t[0]) idx.push_back(as_index(i, "form term"));
    if (idx.size() != degree) throw input_error("ParseError", "form term has the wrong degree");
    f.add_term(MultiIndex(idx), scalar_from_json(t[1]));
  }
  return f;
}

json betti_to_json(const std::vector<std::size_t>& betti) {
  json out = json::object();
  for (std::size_t k = 0; k < betti.size(); ++k)
    if (betti[k] != 0) out[std::to_string(k)] = betti[k];
  return out;
}

json cohomology_to_json(const CohomologySpace& space, std::size_t ambient_dim, const std::vector<Matrix>& bases) {
  json reps = json::object();
  for (std::size_t k = 0; k <= space.top_degree(); ++k) {
    if (space.betti(k) == 0) continue;
    json forms = json::array();
    const Matrix& r = space.representatives(k);
    for (std::size_t c = 0; c < r.cols(); ++c) {
      const Vector chain = r.column(c);
      forms.push_back(form_to_json(Form::from_vector(ambient_dim, k, bases.empty() ? chain : bases[k] * chain)));
    }
    reps[std::to_string(k)] = std::move(forms);
  }
  return json{{"betti", betti_to_json(space.betti_numbers())}, {"representatives", std::move(reps)}};
}

json complex_to_json(const CochainComplex& c, const std::vector<Matrix>& embedding) {
  json diffs = json::object();
  for (std::size_t k = 0; k < c.top_degree(); ++k) diffs[std::to_string(k)] = matrix_to_json(c.differential(k));
  json out{{"dims", c.dims()}, {"differentials", std::move(diffs)}};
  if (!embedding.empty()) {
    json emb = json::object();
    for (std::size_t k = 0; k < embedding.size(); ++k) emb[std::to_string(k)] = matrix_to_json(embedding[k].transpose());
    out["embedding"] = std::move(emb);
  }
  return out;
}

json cohomology_map_to_json(const CohomologyMap& m) {
  json out = json::object();
  for (std::size_t k = 0; k < m.degrees.size(); ++k) out[std::to_string(k)] = matrix_to_json(m.degrees[k]);
  return out;
}

json koszul_result_to_json(const PairContext& context, const KoszulResult& result, bool with_map, bool with_kernel) {
  json out{{"injective", result.injective},
           {"betti_source", betti_to_json(context.relative_cohomology->betti_numbers())},
           {"betti_target", betti_to_json(context.ambient_cohomology->betti_numbers())},
           {"ranks", result.ranks}};
  if (with_map) out["map"] = cohomology_map_to_json(result.cohomology_map);
  if (with_kernel) {
    json kernel = json::array();
    for (const auto& f : result.kernel_forms) kernel.push_back(form_to_json(f));
    out["kernel"] = std::move(kernel);
  }
  return out;
}

json generator_report_to_json(const GeneratorReport& report) {
  json gens = json::array();
  for (const auto& g : report.generators) gens.push_back(json{{"degree", g.degree}, {"label", g.label}, {"form", form_to_json(g.form)}});
  return json{{"generators", std::move(gens)},
              {"presentation", report.exterior_presentation ? "exterior-algebra" : "mismatch"},
              {"betti", betti_to_json(report.betti)}};
}

PairMorphism morphism_from_json(const json& j) {
  SubalgebraPair source = pair_from_json(require(j, "source", "morphism"), "morphism.source");
  SubalgebraPair target = pair_from_json(require(j, "target", "morphism"), "morphism.target");
  const json& m = require(j, "matrix", "morphism");
  Matrix map;
  if (m.is_string() && m.get<std::string>() == "identity") map = Matrix::identity(source.ambient().dim());
  else map = matrix_from_json(m);
  if (map.rows() == 0 && target.ambient().dim() != 0) throw input_error("DimensionMismatch", "empty morphism matrix");
  return make_pair_morphism(std::move(source), std::move(target), std::move(map));
}

}  // namespace koszul::io
