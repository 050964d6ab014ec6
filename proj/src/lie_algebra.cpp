#include "koszul/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "koszul/error.hpp"

namespace koszul {

namespace {

std::vector<Term> to_terms(const Vector& v) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) terms.push_back({k, v[k]});
  return terms;
}

std::string describe(const Violation& v) {
  std::ostringstream out;
  out << to_string(v.kind) << "(";
  for (std::size_t a = 0; a < v.indices.size(); ++a) out << (a ? "," : "") << v.indices[a];
  out << ") residual " << to_string(v.residual);
  return out.str();
}

std::string violation_code(Violation::Kind kind) { return to_string(kind) + "Violation"; }

void check_jacobi(const BracketTable& t, std::vector<Violation>& out) {
  const std::size_t n = t.dim();
  Vector acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        for (auto& x : acc) x = 0;
        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& c : cyc)
          for (const Term& inner : t(c[0], c[1]))
            for (const Term& outer : t(inner.index, c[2])) acc[outer.index] += inner.coefficient * outer.coefficient;
        for (std::size_t l = 0; l < n; ++l)
          if (!is_zero(acc[l])) out.push_back({Violation::Kind::Jacobi, {i, j, k, l}, acc[l]});
      }
}

[[noreturn]] void throw_report(const ValidationReport& report) {
  std::ostringstream msg;
  for (std::size_t a = 0; a < report.violations.size(); ++a) msg << (a ? "; " : "") << describe(report.violations[a]);
  const auto kind = report.violations.front().kind;
  if (kind == Violation::Kind::IndexOutOfRange) throw input_error(violation_code(kind), msg.str());
  throw validation_error(violation_code(kind), msg.str());
}

}  // namespace

void BracketTable::set(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) throw internal_error("DimensionMismatch", "bracket table index out of range");
  entries_[i * dim_ + j] = to_terms(v);
  entries_[j * dim_ + i] = to_terms(scaled(Scalar(-1), v));
  if (i == j && !is_zero(v)) throw validation_error("AntisymmetryViolation", "[e_i, e_i] must vanish");
}

Vector BracketTable::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw input_error("DimensionMismatch", "bracket arguments have the wrong length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      const Scalar w = x[i] * y[j];
      for (const Term& t : (*this)(i, j)) out[t.index] += w * t.coefficient;
    }
  }
  return out;
}

Matrix BracketTable::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) m.set_column(b, bracket(x, unit_vector(dim_, b)));
  return m;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::IndexOutOfRange: return "IndexOutOfRange";
    case Violation::Kind::Antisymmetry: return "Antisymmetry";
    case Violation::Kind::Jacobi: return "Jacobi";
  }
  return "Unknown";
}

namespace {

struct Assembled {
  ValidationReport report;
  BracketTable table;
};

Assembled assemble(std::size_t dim, const std::vector<StructureEntry>& entries) {
  Assembled out{{}, BracketTable(dim)};
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> given;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      out.report.violations.push_back({Violation::Kind::IndexOutOfRange, {e.i, e.j, e.k}, e.value});
      continue;
    }
    given[{e.i, e.j, e.k}] += e.value;
  }
  std::vector<Vector> full(dim * dim, Vector(dim));
  for (const auto& [key, value] : given) {
    const auto [i, j, k] = key;
    if (i == j) {
      if (!is_zero(value)) out.report.violations.push_back({Violation::Kind::Antisymmetry, {i, i, k}, value});
      continue;
    }
    const auto mirror = given.find({j, i, k});
    if (mirror != given.end()) {
      const Scalar residual = value + mirror->second;
      if (i < j && !is_zero(residual)) out.report.violations.push_back({Violation::Kind::Antisymmetry, {i, j, k}, residual});
      full[i * dim + j][k] = value;
    } else {
      full[i * dim + j][k] = value;
      full[j * dim + i][k] = -value;
    }
  }
  if (!out.report.ok()) return out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) out.table.set(i, j, full[i * dim + j]);
  check_jacobi(out.table, out.report.violations);
  return out;
}

}  // namespace

ValidationReport validate_structure(std::size_t dim, const std::vector<StructureEntry>& entries) {
  return assemble(dim, entries).report;
}

LieAlgebra LieAlgebra::from_entries(std::vector<std::string> basis_names, const std::vector<StructureEntry>& entries) {
  Assembled a = assemble(basis_names.size(), entries);
  if (!a.report.ok()) throw_report(a.report);
  return LieAlgebra(std::move(basis_names), std::move(a.table));
}

LieAlgebra LieAlgebra::from_table(std::vector<std::string> basis_names, BracketTable table) {
  if (basis_names.size() != table.dim()) throw input_error("DimensionMismatch", "basis name count differs from table dimension");
  ValidationReport report;
  check_jacobi(table, report.violations);
  if (!report.ok()) throw_report(report);
  return LieAlgebra(std::move(basis_names), std::move(table));
}

std::vector<StructureEntry> LieAlgebra::structure_constants() const {
  std::vector<StructureEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (const Term& t : table_(i, j)) out.push_back({i, j, t.index, t.coefficient});
  return out;
}

SubalgebraPair make_subalgebra(const LieAlgebra& g, const std::vector<Vector>& vectors,
                               const std::optional<std::vector<Vector>>& complement) {
  const std::size_t n = g.dim();
  for (const auto& v : vectors)
    if (v.size() != n) throw input_error("DimensionMismatch", "subalgebra vector has the wrong length");
  const std::size_t m = vectors.size();
  SubalgebraPair pair;
  pair.ambient_ = g;
  pair.sub_basis_ = Matrix::from_columns(n, vectors);
  if (rank(pair.sub_basis_) != m) throw validation_error("DependentVectors", "subalgebra vectors are linearly dependent");

  const ColumnSpanSolver span(pair.sub_basis_);
  BracketTable sub_table(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto coords = span.coordinates(g.bracket(vectors[a], vectors[b]));
      if (!coords) {
        throw validation_error("NotClosedUnderBracket",
                               "bracket of sub-basis vectors " + std::to_string(a) + " and " + std::to_string(b) +
                                   " leaves the span");
      }
      sub_table.set(a, b, *coords);
    }
  std::vector<std::string> sub_names;
  for (std::size_t a = 0; a < m; ++a) {
    const auto& v = vectors[a];
    std::optional<std::size_t> single;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(v[i])) {
        ++nonzero;
        single = i;
      }
    sub_names.push_back(nonzero == 1 && v[*single] == 1 ? g.basis_names()[*single] : "h" + std::to_string(a + 1));
  }
  pair.sub_ = LieAlgebra::from_table(std::move(sub_names), std::move(sub_table));

  std::vector<Vector> quotient;
  if (complement) {
    quotient = *complement;
    for (const auto& v : quotient)
      if (v.size() != n) throw input_error("DimensionMismatch", "complement vector has the wrong length");
    if (quotient.size() + m != n || rank(hstack(pair.sub_basis_, Matrix::from_columns(n, quotient))) != n)
      throw validation_error("InvalidComplement", "complement does not complete the subalgebra to a basis");
  } else {
    const Echelon e = row_reduce(pair.sub_basis_.transpose());
    std::vector<bool> pivot(n, false);
    for (auto c : e.pivot_columns) pivot[c] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!pivot[i]) quotient.push_back(unit_vector(n, i));
  }
  const std::size_t r = quotient.size();
  pair.quotient_basis_ = Matrix::from_columns(n, quotient);

  const Matrix adapted = hstack(pair.sub_basis_, pair.quotient_basis_);
  const Echelon inv = row_reduce(hstack(adapted, Matrix::identity(n)), n);
  Matrix inverse(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse(i, j) = inv.reduced(i, n + j);
  pair.sub_projection_ = inverse.row_block(0, m);
  pair.projection_ = inverse.row_block(m, r);

  for (std::size_t a = 0; a < m; ++a) {
    Matrix act(r, r);
    for (std::size_t b = 0; b < r; ++b) act.set_column(b, pair.project(g.bracket(vectors[a], quotient[b])));
    pair.action_.push_back(std::move(act));
  }
  pair.quotient_bracket_ = BracketTable(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) pair.quotient_bracket_.set(a, b, pair.project(g.bracket(quotient[a], quotient[b])));
  return pair;
}

SubalgebraPair zero_subalgebra(const LieAlgebra& g) { return make_subalgebra(g, {}); }

SubalgebraPair full_subalgebra(const LieAlgebra& g) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < g.dim(); ++i) basis.push_back(unit_vector(g.dim(), i));
  return make_subalgebra(g, basis);
}

PairMorphism make_pair_morphism(SubalgebraPair source, SubalgebraPair target, Matrix map) {
  const LieAlgebra& src = source.ambient();
  const LieAlgebra& dst = target.ambient();
  if (map.rows() != dst.dim() || map.cols() != src.dim())
    throw input_error("DimensionMismatch", "morphism matrix must be dim(target) x dim(source)");
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      const Vector lhs = map * src.bracket(unit_vector(src.dim(), i), unit_vector(src.dim(), j));
      const Vector rhs = dst.bracket(map.column(i), map.column(j));
      if (lhs != rhs) {
        throw validation_error("NotAHomomorphism", "H[e_" + std::to_string(i) + ", e_" + std::to_string(j) +
                                                       "] != [H e_" + std::to_string(i) + ", H e_" + std::to_string(j) + "]");
      }
    }
  if (source.sub_dim() > 0) {
    if (target.sub_dim() == 0) {
      const Matrix image = map * source.sub_basis();
      if (!image.is_zero()) throw validation_error("SubalgebraNotPreserved", "H maps h' outside h = 0");
    } else {
      const ColumnSpanSolver span(target.sub_basis());
      for (std::size_t a = 0; a < source.sub_dim(); ++a)
        if (!span.contains(map * source.sub_basis().column(a)))
          throw validation_error("SubalgebraNotPreserved", "image of sub-basis vector " + std::to_string(a) + " leaves h");
    }
  }
  return PairMorphism{std::move(source), std::move(target), std::move(map)};
}

PairMorphism compose(const PairMorphism& second, const PairMorphism& first) {
  if (second.source.ambient().dim() != first.target.ambient().dim())
    throw input_error("DimensionMismatch", "morphisms do not compose");
  return make_pair_morphism(first.source, second.target, second.map * first.map);
}

DirectSum direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  const std::size_t n = g.dim();
  const std::size_t m = h.dim();
  std::vector<std::string> names = g.basis_names();
  for (const auto& name : h.basis_names()) {
    std::string candidate = name;
    while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += "'";
    names.push_back(candidate);
  }
  std::vector<StructureEntry> entries;
  for (const auto& e : g.structure_constants()) entries.push_back(e);
  for (const auto& e : h.structure_constants()) entries.push_back({e.i + n, e.j + n, e.k + n, e.value});
  DirectSum out{LieAlgebra::from_entries(std::move(names), entries), Matrix(n + m, n), Matrix(n + m, m)};
  for (std::size_t i = 0; i < n; ++i) out.first_injection(i, i) = 1;
  for (std::size_t i = 0; i < m; ++i) out.second_injection(n + i, i) = 1;
  return out;
}

}  // namespace koszul
