#include "koszul/builtins.hpp"

#include <charconv>
#include <sstream>

#include "koszul/error.hpp"

namespace koszul {

namespace {

std::string index_pair(std::size_t i, std::size_t j, std::size_t n) {
  if (n < 10) return std::to_string(i + 1) + std::to_string(j + 1);
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

Matrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix pad(const Matrix& m, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<std::string> matrix_names(const BuiltinRef& ref) {
  const std::size_t n = matrix_size(ref);
  std::vector<std::string> names;
  if (ref.name == "gl") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) names.push_back("E" + index_pair(i, j, n));
  } else if (ref.name == "sl") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) names.push_back("E" + index_pair(i, j, n));
    for (std::size_t i = 0; i + 1 < n; ++i) names.push_back("H" + std::to_string(i + 1));
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) names.push_back("A" + index_pair(i, j, n));
  }
  return names;
}

std::size_t single_param(const BuiltinRef& ref) {
  if (ref.params.size() != 1)
    throw input_error("InvalidParams", "builtin '" + ref.name + "' takes exactly one parameter");
  return ref.params.front();
}

}  // namespace

BuiltinRef BuiltinRef::parse(std::string_view text) {
  BuiltinRef ref;
  const auto colon = text.find(':');
  ref.name = std::string(text.substr(0, colon));
  if (ref.name.empty()) throw input_error("ParseError", "empty builtin name");
  if (colon == std::string_view::npos) return ref;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view piece = rest.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw input_error("ParseError", "bad builtin parameter '" + std::string(piece) + "' in '" + std::string(text) + "'");
    ref.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return ref;
}

std::string BuiltinRef::to_string() const {
  std::ostringstream out;
  out << name;
  for (std::size_t a = 0; a < params.size(); ++a) out << (a ? "," : ":") << params[a];
  return out.str();
}

bool is_matrix_builtin(const std::string& name) { return name == "gl" || name == "sl" || name == "so"; }

std::size_t matrix_size(const BuiltinRef& ref) {
  if (!is_matrix_builtin(ref.name)) throw input_error("InvalidParams", "'" + ref.name + "' is not a matrix builtin");
  const std::size_t n = single_param(ref);
  if (n < 1 || (ref.name == "so" && n < 2) || (ref.name == "sl" && n < 2))
    throw input_error("InvalidParams", "matrix size too small for " + ref.to_string());
  if (n > 8) throw input_error("InvalidParams", "matrix size above 8 is not supported");
  return n;
}

std::vector<Matrix> matrix_basis(const BuiltinRef& ref) {
  const std::size_t n = matrix_size(ref);
  std::vector<Matrix> basis;
  if (ref.name == "gl") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis.push_back(elementary(n, i, j));
  } else if (ref.name == "sl") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) basis.push_back(elementary(n, i, j));
    for (std::size_t i = 0; i + 1 < n; ++i) basis.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) basis.push_back(elementary(n, i, j) - elementary(n, j, i));
  }
  return basis;
}

LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::vector<std::string> names) {
  const std::size_t d = basis.size();
  if (names.size() != d) throw input_error("DimensionMismatch", "one name per basis matrix is required");
  const std::size_t flat = d ? basis.front().rows() * basis.front().cols() : 0;
  std::vector<Vector> columns;
  for (const auto& m : basis) columns.push_back(flatten(m));
  const ColumnSpanSolver span(Matrix::from_columns(flat, columns));
  BracketTable table(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto coords = span.coordinates(flatten(basis[i] * basis[j] - basis[j] * basis[i]));
      if (!coords) throw validation_error("NotClosedUnderBracket", "matrix commutator leaves the span");
      table.set(i, j, *coords);
    }
  return LieAlgebra::from_table(std::move(names), std::move(table));
}

Vector matrix_coordinates(const BuiltinRef& ref, const Matrix& m) {
  std::vector<Vector> columns;
  for (const auto& b : matrix_basis(ref)) columns.push_back(flatten(b));
  const std::size_t n = matrix_size(ref);
  const ColumnSpanSolver span(Matrix::from_columns(n * n, columns));
  const auto coords = span.coordinates(flatten(m));
  if (!coords) throw validation_error("NotInAlgebra", "matrix does not lie in " + ref.to_string());
  return *coords;
}

LieAlgebra builtin(const BuiltinRef& ref) {
  if (is_matrix_builtin(ref.name)) return matrix_lie_algebra(matrix_basis(ref), matrix_names(ref));
  if (ref.name == "abelian") {
    const std::size_t n = single_param(ref);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return LieAlgebra::from_entries(std::move(names), {});
  }
  if (ref.name == "heisenberg") {
    const std::size_t d = single_param(ref);
    if (d < 3 || d % 2 == 0) throw input_error("InvalidParams", "heisenberg dimension must be odd and at least 3");
    const std::size_t k = (d - 1) / 2;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("p" + std::to_string(i + 1));
    for (std::size_t i = 0; i < k; ++i) names.push_back("q" + std::to_string(i + 1));
    names.push_back("z");
    std::vector<StructureEntry> entries;
    for (std::size_t i = 0; i < k; ++i) entries.push_back({i, k + i, 2 * k, Scalar(1)});
    return LieAlgebra::from_entries(std::move(names), entries);
  }
  throw input_error("UnknownBuiltin", "unknown builtin '" + ref.name + "'");
}

LieAlgebra builtin(std::string_view name, std::vector<std::size_t> params) {
  return builtin(BuiltinRef{std::string(name), std::move(params)});
}

SubalgebraPair gl_so_pair(std::size_t n) {
  const BuiltinRef gl{"gl", {n}};
  const LieAlgebra g = builtin(gl);
  std::vector<Vector> sub;
  std::vector<Vector> sym;
  for (std::size_t i = 0; i < n; ++i) sym.push_back(matrix_coordinates(gl, elementary(n, i, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      sub.push_back(matrix_coordinates(gl, elementary(n, i, j) - elementary(n, j, i)));
      sym.push_back(matrix_coordinates(gl, elementary(n, i, j) + elementary(n, j, i)));
    }
  return make_subalgebra(g, sub, sym);
}

SubalgebraPair canonical_subalgebra(const BuiltinRef& ambient, std::string_view sub_spec) {
  const LieAlgebra g = builtin(ambient);
  if (sub_spec == "zero") return zero_subalgebra(g);
  if (sub_spec == "full") return full_subalgebra(g);
  if (sub_spec == "center") {
    if (ambient.name != "heisenberg") throw input_error("InvalidParams", "'center' is only defined for heisenberg");
    return make_subalgebra(g, {unit_vector(g.dim(), g.dim() - 1)});
  }
  const BuiltinRef sub = BuiltinRef::parse(sub_spec);
  if (!is_matrix_builtin(ambient.name) || !is_matrix_builtin(sub.name))
    throw input_error("InvalidParams", "sub-spec '" + std::string(sub_spec) + "' needs matrix builtins on both sides");
  const std::size_t n = matrix_size(ambient);
  const std::size_t k = matrix_size(sub);
  if (k > n) throw input_error("InvalidParams", "sub-spec block is larger than the ambient matrices");
  if (ambient.name == "gl" && sub.name == "so" && k == n) return gl_so_pair(n);
  std::vector<Vector> vectors;
  for (const auto& m : matrix_basis(sub)) vectors.push_back(matrix_coordinates(ambient, pad(m, n)));
  return make_subalgebra(g, vectors);
}

Matrix gl_block_inclusion(std::size_t n, std::size_t target_n) {
  if (n > target_n) throw input_error("InvalidParams", "block inclusion needs n <= target n");
  Matrix m(target_n * target_n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i * target_n + j, i * n + j) = 1;
  return m;
}

}  // namespace koszul
