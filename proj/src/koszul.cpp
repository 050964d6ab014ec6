#include "koszul/koszul.hpp"

#include "koszul/error.hpp"
#include "koszul/parallel.hpp"

namespace koszul {

namespace {

ChainMap pullback_into(const Matrix& linear_map, const std::vector<Matrix>& src_basis, const std::vector<Matrix>* dst_basis,
                       const char* code) {
  ChainMap f(src_basis.size());
  parallel_for(src_basis.size(), [&](std::size_t k) {
    Matrix pulled = pullback_matrix(linear_map, k) * src_basis[k];
    if (!dst_basis) {
      f[k] = std::move(pulled);
      return;
    }
    if (k >= dst_basis->size() || (*dst_basis)[k].cols() == 0) {
      if (!pulled.is_zero()) throw internal_error(code, "pullback leaves the target subspace in degree " + std::to_string(k));
      f[k] = Matrix(0, src_basis[k].cols());
      return;
    }
    const ColumnSpanSolver solver((*dst_basis)[k]);
    auto coords = solver.coordinates(pulled);
    if (!coords) throw internal_error(code, "pullback leaves the target subspace in degree " + std::to_string(k));
    f[k] = std::move(*coords);
  });
  return f;
}

void check_equal(const CohomologyMap& a, const CohomologyMap& b, const char* code, const char* what) {
  const std::size_t degrees = std::max(a.degrees.size(), b.degrees.size());
  for (std::size_t k = 0; k < degrees; ++k) {
    const bool a_has = k < a.degrees.size();
    const bool b_has = k < b.degrees.size();
    const bool same = a_has && b_has ? a.degrees[k] == b.degrees[k]
                                     : (a_has ? a.degrees[k].is_zero() : b.degrees[k].is_zero());
    if (!same) throw internal_error(code, std::string(what) + " differ in degree " + std::to_string(k));
  }
}

/// Pads a cohomology map with zero-column degrees so compositions see the full target range.
CohomologyMap pad_source_degrees(CohomologyMap m, const CohomologySpace& target, std::size_t degrees) {
  while (m.degrees.size() < degrees) m.degrees.emplace_back(target.betti(m.degrees.size()), 0);
  return m;
}

void require_ambient(const PairContext& c) {
  if (!c.ambient || !c.ambient_cohomology) throw internal_error("MissingAmbient", "context was built without H(g)");
}

std::vector<Matrix> identity_bases(std::size_t dim) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k <= dim; ++k) out.push_back(Matrix::identity(binomial(dim, k)));
  return out;
}

}  // namespace

PairContext make_context(const SubalgebraPair& pair, bool with_ambient) {
  PairContext c{pair, nullptr, nullptr, nullptr, nullptr};
  if (with_ambient) {
    c.ambient = exterior_complex(pair.ambient());
    c.ambient_cohomology = std::make_shared<const CohomologySpace>(compute_cohomology(c.ambient));
  }
  c.quotient = std::make_shared<const InvariantQuotientComplex>(invariant_quotient_complex(pair));
  c.relative_cohomology = std::make_shared<const CohomologySpace>(compute_cohomology(c.quotient->complex));
  return c;
}

ChainMap delta_chain(const InvariantQuotientComplex& quotient, const CochainComplex& ambient) {
  const Matrix minus_s = Scalar(-1) * quotient.pair.projection();
  ChainMap f = pullback_into(minus_s, quotient.invariants, nullptr, "ChainMapViolation");
  try {
    verify_chain_map(f, *quotient.complex, ambient);
  } catch (const Error& e) {
    throw internal_error("ChainMapViolation", e.what());
  }
  return f;
}

KoszulResult delta_cohom(const PairContext& context) {
  require_ambient(context);
  KoszulResult out;
  out.chain_map = delta_chain(*context.quotient, *context.ambient);
  out.cohomology_map = induced_map(out.chain_map, *context.relative_cohomology, *context.ambient_cohomology);
  const CohomologySpace& rel = *context.relative_cohomology;
  const std::size_t r = context.pair.quotient_dim();
  out.injective = true;
  for (std::size_t k = 0; k < out.cohomology_map.degrees.size(); ++k) {
    const Matrix& m = out.cohomology_map.degrees[k];
    out.ranks.push_back(rank(m));
    if (out.ranks.back() == m.cols()) continue;
    out.injective = false;
    const Matrix kernel = nullspace(m);
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      CohomologyClass c{k, kernel.column(j)};
      const Vector chain = rel.representative(c);
      out.kernel_forms.push_back(Form::from_vector(r, k, context.quotient->invariants[k] * chain));
      out.kernel_classes.push_back(std::move(c));
    }
  }
  return out;
}

FactorizationReport factorization_check(const PairContext& context, const KoszulResult& result) {
  require_ambient(context);
  const BasicSubcomplex basic = basic_subcomplex(context.pair);
  const CohomologySpace basic_h = compute_cohomology(basic.complex);
  const Matrix minus_s = Scalar(-1) * context.pair.projection();
  const ChainMap to_basic = pullback_into(minus_s, context.quotient->invariants, &basic.embedding, "FactorizationMismatch");
  const ChainMap inclusion = basic.embedding;
  FactorizationReport out;
  out.basic_betti = basic_h.betti_numbers();
  const CohomologyMap minus_s_sharp = induced_map(to_basic, *context.relative_cohomology, basic_h);
  const CohomologyMap k_sharp = induced_map(inclusion, basic_h, *context.ambient_cohomology);
  out.via_basic = compose(k_sharp, minus_s_sharp);
  out.direct = result.cohomology_map;
  check_equal(out.via_basic, out.direct, "FactorizationMismatch", "k# o (-s)# and Delta#");
  return out;
}

NczReport ncz(const PairContext& context) {
  require_ambient(context);
  const SubalgebraPair& pair = context.pair;
  const auto sub_complex = exterior_complex(pair.sub_algebra());
  const CohomologySpace sub_h = compute_cohomology(sub_complex);
  NczReport out;
  out.restriction = induced_map(restriction_map(pair), *context.ambient_cohomology, sub_h);
  out.sub_betti = sub_h.betti_numbers();
  out.ncz = true;
  for (std::size_t k = 0; k <= sub_h.top_degree(); ++k) {
    out.ranks.push_back(out.restriction.rank(k));
    if (out.ranks.back() != sub_h.betti(k)) out.ncz = false;
  }
  if (!out.ncz) return out;
  for (std::size_t k = 0; k <= sub_h.top_degree(); ++k) {
    const Matrix& r = out.restriction.degrees[k];
    Matrix w(r.cols(), r.rows());
    for (std::size_t j = 0; j < r.rows(); ++j) {
      const AffineSolution s = solve_affine(r, unit_vector(r.rows(), j));
      if (!s.solution) throw internal_error("SurjectivityWitness", "no preimage for a basis class of H(h)");
      w.set_column(j, *s.solution);
    }
    if (r * w != Matrix::identity(r.rows())) throw internal_error("SurjectivityWitness", "right inverse does not verify");
    out.right_inverse.push_back(std::move(w));
  }
  return out;
}

ComplementReport invariant_complement(const SubalgebraPair& pair) {
  const LieAlgebra& g = pair.ambient();
  const std::size_t n = g.dim();
  const std::size_t m = pair.sub_dim();
  const Matrix& iota = pair.sub_basis();
  ComplementReport out;
  if (m == 0) {
    out.exists = true;
    out.projection = Matrix(0, n);
    out.complement = Matrix::identity(n);
    return out;
  }
  // unknowns P[a][i] at a * n + i
  const std::size_t unknowns = m * n;
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector row(unknowns);
      for (std::size_t i = 0; i < n; ++i) row[a * n + i] = iota(i, b);
      rows.push_back(std::move(row));
      rhs.push_back(a == b ? 1 : 0);
    }
  for (std::size_t c = 0; c < m; ++c) {
    const Matrix ad_g = g.ad(iota.column(c));
    const Matrix ad_h = pair.sub_algebra().ad(unit_vector(m, c));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t j = 0; j < n; ++j) {
        Vector row(unknowns);
        for (std::size_t i = 0; i < n; ++i) row[a * n + i] += ad_g(i, j);
        for (std::size_t b = 0; b < m; ++b) row[b * n + j] -= ad_h(a, b);
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
  }
  const AffineSolution s = solve_affine(Matrix::from_rows(unknowns, rows), rhs);
  if (!s.solution) {
    out.certificate = s.certificate;
    return out;
  }
  out.exists = true;
  out.projection = Matrix(m, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i) out.projection(a, i) = (*s.solution)[a * n + i];
  out.complement = nullspace(out.projection);
  if (out.complement.cols() != n - m) throw internal_error("ComplementCheck", "kernel has the wrong dimension");
  const ColumnSpanSolver span(out.complement);
  for (std::size_t c = 0; c < m; ++c) {
    const Matrix moved = g.ad(iota.column(c)) * out.complement;
    if (n > m && !span.coordinates(moved)) throw internal_error("ComplementCheck", "complement is not h-invariant");
  }
  return out;
}

DirectProductReport direct_product_check(const LieAlgebra& g, const LieAlgebra& h) {
  const DirectSum sum = direct_sum(g, h);
  std::vector<Vector> second;
  for (std::size_t j = 0; j < h.dim(); ++j) second.push_back(sum.second_injection.column(j));
  const SubalgebraPair pair = make_subalgebra(sum.sum, second);
  const PairContext context = make_context(pair);
  const KoszulResult result = delta_cohom(context);
  const std::size_t n = g.dim();
  const std::size_t total = sum.sum.dim();

  DirectProductReport out;
  out.injective = result.injective;
  out.betti_source = context.relative_cohomology->betti_numbers();
  out.betti_target = context.ambient_cohomology->betti_numbers();

  // the quotient basis is the first factor, so forms on g/h are forms on g
  if (pair.quotient_basis() != sum.first_injection)
    throw internal_error("FormulaMismatch", "quotient basis is not the first factor");
  Matrix first_projection(n, total);
  for (std::size_t i = 0; i < n; ++i) first_projection(i, i) = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const Matrix& inv = context.quotient->invariants[k];
    if (inv.cols() != binomial(n, k)) throw internal_error("FormulaMismatch", "h does not act trivially on g + h / h");
    const Matrix expected = Scalar(k % 2 == 0 ? 1 : -1) * (pullback_matrix(first_projection, k) * inv);
    if (expected != result.chain_map[k]) {
      for (std::size_t j = 0; j < inv.cols(); ++j)
        if (expected.column(j) != result.chain_map[k].column(j))
          throw internal_error("FormulaMismatch", "degree " + std::to_string(k) + ", invariant basis form " + std::to_string(j));
    }
  }
  out.formula_holds = true;
  out.horizontal = true;
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& y : second)
      if (!(interior_matrix(y, k) * result.chain_map[k]).is_zero()) out.horizontal = false;
  return out;
}

FunctorialityReport functoriality_check(const PairMorphism& morphism) {
  const PairContext target = make_context(morphism.target);
  const PairContext source = make_context(morphism.source);
  const SubalgebraPair& tp = morphism.target;
  const SubalgebraPair& sp = morphism.source;

  Matrix quotient_map(tp.quotient_dim(), sp.quotient_dim());
  for (std::size_t b = 0; b < sp.quotient_dim(); ++b)
    quotient_map.set_column(b, tp.project(morphism.map * sp.quotient_basis().column(b)));
  const ChainMap plus_star = pullback_into(quotient_map, target.quotient->invariants, &source.quotient->invariants, "DiagramMismatch");
  const ChainMap h_star = pullback_into(morphism.map, identity_bases(tp.ambient().dim()), nullptr, "DiagramMismatch");

  FunctorialityReport out;
  out.quotient_pullback = induced_map(plus_star, *target.relative_cohomology, *source.relative_cohomology);
  const CohomologyMap h_sharp = induced_map(h_star, *target.ambient_cohomology, *source.ambient_cohomology);
  const KoszulResult top = delta_cohom(target);
  const KoszulResult bottom = delta_cohom(source);
  const std::size_t degrees = out.quotient_pullback.degrees.size();
  out.right_after_top = compose(h_sharp, top.cohomology_map);
  out.bottom_after_left =
      compose(pad_source_degrees(bottom.cohomology_map, *source.ambient_cohomology, degrees), out.quotient_pullback);
  check_equal(out.right_after_top, out.bottom_after_left, "DiagramMismatch", "H^# o Delta# and Delta'# o H^{+#}");
  out.commutes = true;
  return out;
}

}  // namespace koszul
