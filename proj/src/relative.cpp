#include "koszul/relative.hpp"

#include "koszul/error.hpp"
#include "koszul/exterior.hpp"
#include "koszul/parallel.hpp"

namespace koszul {

namespace {

/// Restricts a differential to subspaces given by column bases; throws `code` if the image
/// leaves the target subspace.
std::vector<Matrix> restricted_differentials(const std::vector<Matrix>& bases, const std::vector<Matrix>& ambient_ds,
                                             const char* code) {
  const std::size_t top = bases.size() - 1;
  std::vector<Matrix> ds(top);
  parallel_for(top, [&](std::size_t k) {
    const Matrix image = ambient_ds[k] * bases[k];
    if (bases[k + 1].cols() == 0) {
      if (!image.is_zero()) throw internal_error(code, "differential leaves the subspace in degree " + std::to_string(k));
      ds[k] = Matrix(0, bases[k].cols());
      return;
    }
    const ColumnSpanSolver solver(bases[k + 1]);
    auto coords = solver.coordinates(image);
    if (!coords) throw internal_error(code, "differential leaves the subspace in degree " + std::to_string(k));
    ds[k] = std::move(*coords);
  });
  return ds;
}

std::vector<std::size_t> column_counts(const std::vector<Matrix>& bases) {
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  return dims;
}

}  // namespace

BasicSubcomplex basic_subcomplex(const SubalgebraPair& pair) {
  const LieAlgebra& g = pair.ambient();
  const std::size_t n = g.dim();
  require_dense_dim(n, "ambient algebra");
  BasicSubcomplex out{pair, std::vector<Matrix>(n + 1), nullptr};
  std::vector<Matrix> ds(n);
  parallel_for(n + 1, [&](std::size_t k) {
    const std::size_t dim_k = binomial(n, k);
    Matrix conditions(0, dim_k);
    for (std::size_t a = 0; a < pair.sub_dim(); ++a) {
      const Vector x = pair.sub_basis().column(a);
      conditions = vstack(conditions, interior_matrix(x, k));
      conditions = vstack(conditions, lie_derivative_matrix(g, x, k));
    }
    out.embedding[k] = nullspace(conditions);
    if (k < n) ds[k] = ce_differential(g, k);
  });
  auto restricted = restricted_differentials(out.embedding, ds, "NotDStable");
  out.complex = std::make_shared<CochainComplex>(column_counts(out.embedding), std::move(restricted),
                                                 ExteriorEmbedding::subspace(n, out.embedding));
  return out;
}

Matrix quotient_differential(const SubalgebraPair& pair, std::size_t degree) {
  return Scalar(-1) * ce_differential(pair.quotient_bracket(), degree);
}

InvariantQuotientComplex invariant_quotient_complex(const SubalgebraPair& pair) {
  const std::size_t r = pair.quotient_dim();
  require_dense_dim(r, "quotient g/h");
  InvariantQuotientComplex out{pair, std::vector<Matrix>(r + 1), nullptr};
  std::vector<Matrix> ds(r);
  parallel_for(r + 1, [&](std::size_t k) {
    Matrix conditions(0, binomial(r, k));
    for (const Matrix& act : pair.action()) conditions = vstack(conditions, derivation_matrix(act, k));
    out.invariants[k] = nullspace(conditions);
    if (k < r) ds[k] = quotient_differential(pair, k);
  });
  auto restricted = restricted_differentials(out.invariants, ds, "NotInvariant");
  out.complex = std::make_shared<CochainComplex>(column_counts(out.invariants), std::move(restricted),
                                                 ExteriorEmbedding::subspace(r, out.invariants));
  return out;
}

ModelComparison compare_models(const InvariantQuotientComplex& quotient, const BasicSubcomplex& basic) {
  const SubalgebraPair& pair = quotient.pair;
  const std::size_t r = pair.quotient_dim();
  const std::size_t n = pair.ambient().dim();
  ModelComparison out;
  out.basic_dims = basic.complex->dims();
  out.invariant_dims = quotient.complex->dims();
  out.basic_dims.resize(n + 1, 0);
  out.invariant_dims.resize(n + 1, 0);
  if (out.basic_dims != out.invariant_dims) throw internal_error("ModelMismatch", "basic and invariant dimensions differ");

  const std::size_t top = r;
  out.isomorphism.resize(top + 1);
  parallel_for(top + 1, [&](std::size_t k) {
    const Matrix pulled = pullback_matrix(pair.projection(), k) * quotient.invariants[k];
    const ColumnSpanSolver solver(basic.embedding[k]);
    auto coords = solver.coordinates(pulled);
    if (!coords) throw internal_error("ModelMismatch", "pullback of an invariant is not basic in degree " + std::to_string(k));
    if (coords->rows() != coords->cols() || rank(*coords) != coords->rows())
      throw internal_error("ModelMismatch", "pullback is not bijective in degree " + std::to_string(k));
    out.isomorphism[k] = std::move(*coords);
  });
  out.signs.assign(top, -1);
  out.sign_forced.assign(top, false);
  for (std::size_t k = 0; k < top; ++k) {
    const Matrix lhs = out.isomorphism[k + 1] * quotient.complex->differential(k);
    const Matrix rhs = basic.complex->differential(k) * out.isomorphism[k];
    const bool minus = lhs == Scalar(-1) * rhs;
    const bool plus = lhs == rhs;
    if (!minus && !plus) throw internal_error("ModelMismatch", "no sign intertwines the differentials in degree " + std::to_string(k));
    out.sign_forced[k] = !(minus && plus);
    out.signs[k] = minus ? -1 : 1;
  }
  return out;
}

ChainMap restriction_map(const SubalgebraPair& pair) {
  const std::size_t n = pair.ambient().dim();
  ChainMap f(n + 1);
  parallel_for(n + 1, [&](std::size_t k) { f[k] = pullback_matrix(pair.sub_basis(), k); });
  return f;
}

}  // namespace koszul
