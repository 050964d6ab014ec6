#include "koszul/cohomology.hpp"

#include "koszul/error.hpp"
#include "koszul/exterior.hpp"
#include "koszul/parallel.hpp"

namespace koszul {

std::shared_ptr<const ExteriorEmbedding> ExteriorEmbedding::full(std::size_t ambient_dim) {
  auto e = std::make_shared<ExteriorEmbedding>();
  e->ambient_dim_ = ambient_dim;
  return e;
}

std::shared_ptr<const ExteriorEmbedding> ExteriorEmbedding::subspace(std::size_t ambient_dim, std::vector<Matrix> bases) {
  auto e = std::make_shared<ExteriorEmbedding>();
  e->ambient_dim_ = ambient_dim;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (bases[k].rows() != binomial(ambient_dim, k))
      throw internal_error("DimensionMismatch", "embedding basis has the wrong number of rows");
    e->solvers_.emplace_back(bases[k]);
  }
  e->bases_ = std::move(bases);
  return e;
}

Vector ExteriorEmbedding::embed(std::size_t degree, const Vector& chain) const {
  if (is_full()) return chain;
  return bases_.at(degree) * chain;
}

std::optional<Vector> ExteriorEmbedding::restrict(std::size_t degree, const Vector& element) const {
  if (is_full()) return element;
  if (degree >= solvers_.size()) {
    if (is_zero(element)) return Vector{};
    return std::nullopt;
  }
  return solvers_[degree].coordinates(element);
}

Vector ExteriorEmbedding::multiply(std::size_t p, const Vector& a, std::size_t q, const Vector& b) const {
  if (p + q > ambient_dim_) return {};
  const Vector product = wedge_vectors(ambient_dim_, p, embed(p, a), q, embed(q, b));
  auto chain = restrict(p + q, product);
  if (!chain) throw internal_error("ProductNotClosed", "wedge product leaves the chain subspace");
  return *chain;
}

CochainComplex::CochainComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials,
                               std::shared_ptr<const ExteriorEmbedding> product)
    : dims_(std::move(dims)), differentials_(std::move(differentials)), product_(std::move(product)) {
  if (dims_.empty()) throw internal_error("InvalidComplex", "a complex needs at least degree 0");
  if (differentials_.size() != dims_.size() - 1) throw internal_error("InvalidComplex", "one differential per degree below the top");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    if (differentials_[k].rows() != dims_[k + 1] || differentials_[k].cols() != dims_[k])
      throw internal_error("InvalidComplex", "differential " + std::to_string(k) + " has the wrong shape");
  }
  differentials_.emplace_back(0, dims_.back());
  std::vector<bool> ok(differentials_.size(), true);
  parallel_for(differentials_.size() - 1, [&](std::size_t k) {
    if (k + 1 < differentials_.size() - 1) ok[k] = (differentials_[k + 1] * differentials_[k]).is_zero();
  });
  for (std::size_t k = 0; k < ok.size(); ++k)
    if (!ok[k]) throw internal_error("InvalidComplex", "d_" + std::to_string(k + 1) + " d_" + std::to_string(k) + " != 0");
}

const Matrix& CochainComplex::differential(std::size_t degree) const {
  static const Matrix empty;
  return degree < differentials_.size() ? differentials_[degree] : empty;
}

void require_dense_dim(std::size_t dim, const char* what) {
  if (dim > kMaxDenseDim)
    throw input_error("DimensionTooLarge", std::string(what) + " has dimension " + std::to_string(dim) + "; dense complexes stop at " +
                                               std::to_string(kMaxDenseDim));
}

std::shared_ptr<const CochainComplex> exterior_complex(const BracketTable& table, const Scalar& sign) {
  const std::size_t n = table.dim();
  require_dense_dim(n, "exterior algebra");
  std::vector<std::size_t> dims(n + 1);
  for (std::size_t k = 0; k <= n; ++k) dims[k] = binomial(n, k);
  std::vector<Matrix> ds(n);
  parallel_for(n, [&](std::size_t k) {
    ds[k] = ce_differential(table, k);
    if (sign != 1) ds[k] = sign * ds[k];
  });
  return std::make_shared<CochainComplex>(std::move(dims), std::move(ds), ExteriorEmbedding::full(n));
}

std::shared_ptr<const CochainComplex> exterior_complex(const LieAlgebra& g) { return exterior_complex(g.table(), Scalar(1)); }

long euler_characteristic(const CochainComplex& c) {
  long chi = 0;
  for (std::size_t k = 0; k <= c.top_degree(); ++k) chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(c.dim(k));
  return chi;
}

std::vector<std::size_t> CohomologySpace::betti_numbers() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees_) out.push_back(d.betti);
  return out;
}

std::size_t CohomologySpace::total_dimension() const {
  std::size_t total = 0;
  for (const auto& d : degrees_) total += d.betti;
  return total;
}

Reduction CohomologySpace::reduce(const Vector& cocycle, std::size_t k) const {
  if (k > top_degree()) {
    if (!cocycle.empty()) throw internal_error("DimensionMismatch", "cochain above the top degree");
    return {};
  }
  const Vector residual = complex_->differential(k) * cocycle;
  if (!is_zero(residual)) {
    std::string text;
    for (std::size_t i = 0; i < residual.size(); ++i)
      if (!is_zero(residual[i])) text += " [" + std::to_string(i) + "]=" + to_string(residual[i]);
    throw validation_error("NotACocycle", "d c != 0 in degree " + std::to_string(k) + ", residual" + text);
  }
  const Degree& d = degrees_[k];
  const auto coords = d.reducer.coordinates(cocycle);
  if (!coords) throw internal_error("ReductionFailed", "cocycle outside the computed cocycle space");
  const std::size_t boundary_rank = d.coboundary_basis.cols();
  Reduction r;
  r.coordinates.assign(coords->begin() + static_cast<std::ptrdiff_t>(boundary_rank), coords->end());
  const Vector boundary_part(coords->begin(), coords->begin() + static_cast<std::ptrdiff_t>(boundary_rank));
  r.primitive = d.coboundary_preimages * boundary_part;
  return r;
}

CohomologyClass CohomologySpace::class_of(const Vector& cocycle, std::size_t k) const {
  return {k, reduce(cocycle, k).coordinates};
}

Vector CohomologySpace::representative(const CohomologyClass& c) const {
  if (c.degree > top_degree()) return {};
  return representatives(c.degree) * c.coordinates;
}

CohomologyClass CohomologySpace::unit() const {
  const ExteriorEmbedding* product = complex_->product();
  if (!product) throw input_error("NoProduct", "complex carries no product");
  const auto one = product->restrict(0, Vector{Scalar(1)});
  if (!one) throw internal_error("ProductNotClosed", "constants are not chains in degree 0");
  return class_of(*one, 0);
}

CohomologyClass CohomologySpace::basis_class(std::size_t k, std::size_t j) const { return {k, unit_vector(betti(k), j)}; }

CohomologySpace compute_cohomology(std::shared_ptr<const CochainComplex> complex) {
  const CochainComplex& c = *complex;
  std::vector<CohomologySpace::Degree> degrees(c.top_degree() + 1);
  parallel_for(degrees.size(), [&](std::size_t k) {
    CohomologySpace::Degree& out = degrees[k];
    const std::size_t n = c.dim(k);
    const Matrix cocycles = nullspace(c.differential(k));
    std::vector<Vector> boundary_cols;
    std::vector<Vector> preimages;
    if (k > 0) {
      const Matrix& prev = c.differential(k - 1);
      const Echelon e = row_reduce(prev);
      for (std::size_t col : e.pivot_columns) {
        boundary_cols.push_back(prev.column(col));
        preimages.push_back(unit_vector(c.dim(k - 1), col));
      }
    }
    out.coboundary_basis = Matrix::from_columns(n, boundary_cols);
    out.coboundary_preimages = Matrix::from_columns(k > 0 ? c.dim(k - 1) : 0, preimages);
    const std::size_t b = boundary_cols.size();
    const Echelon e = row_reduce(hstack(out.coboundary_basis, cocycles));
    std::vector<Vector> reps;
    for (std::size_t col : e.pivot_columns) {
      if (col < b) continue;
      reps.push_back(cocycles.column(col - b));
    }
    if (e.rank() != cocycles.cols())
      throw internal_error("InvalidComplex", "coboundaries are not contained in cocycles in degree " + std::to_string(k));
    out.betti = reps.size();
    out.representatives = Matrix::from_columns(n, reps);
    out.reducer = ColumnSpanSolver(hstack(out.coboundary_basis, out.representatives));
  });
  return CohomologySpace(std::move(complex), std::move(degrees));
}

void verify_chain_map(const ChainMap& f, const CochainComplex& src, const CochainComplex& dst) {
  if (f.size() != src.top_degree() + 1) throw internal_error("NotAChainMap", "one matrix per source degree is required");
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k].rows() != dst.dim(k) || f[k].cols() != src.dim(k))
      throw internal_error("NotAChainMap", "chain map matrix in degree " + std::to_string(k) + " has the wrong shape");
  std::vector<std::string> failures(f.size());
  parallel_for(f.size(), [&](std::size_t k) {
    const Matrix lhs = k < dst.top_degree() ? dst.differential(k) * f[k] : Matrix(0, src.dim(k));
    Matrix rhs = k + 1 < f.size() ? f[k + 1] * src.differential(k) : Matrix(dst.dim(k + 1), src.dim(k));
    if (lhs.rows() != rhs.rows()) rhs = Matrix(lhs.rows(), src.dim(k));
    if (lhs == rhs) return;
    for (std::size_t j = 0; j < src.dim(k); ++j)
      if (lhs.column(j) != rhs.column(j)) {
        failures[k] = "degree " + std::to_string(k) + ", basis vector " + std::to_string(j);
        return;
      }
  });
  for (const auto& msg : failures)
    if (!msg.empty()) throw internal_error("NotAChainMap", "d f != f d in " + msg);
}

ChainMap compose(const ChainMap& second, const ChainMap& first) {
  ChainMap out;
  for (std::size_t k = 0; k < first.size() && k < second.size(); ++k) out.push_back(second[k] * first[k]);
  return out;
}

std::size_t CohomologyMap::rank(std::size_t degree) const { return degree < degrees.size() ? koszul::rank(degrees[degree]) : 0; }

bool CohomologyMap::injective() const {
  for (std::size_t k = 0; k < degrees.size(); ++k)
    if (rank(k) != degrees[k].cols()) return false;
  return true;
}

bool CohomologyMap::surjective() const {
  for (std::size_t k = 0; k < degrees.size(); ++k)
    if (rank(k) != degrees[k].rows()) return false;
  return true;
}

CohomologyMap induced_map(const ChainMap& f, const CohomologySpace& src, const CohomologySpace& dst) {
  verify_chain_map(f, src.complex(), dst.complex());
  CohomologyMap out;
  out.degrees.resize(f.size());
  parallel_for(f.size(), [&](std::size_t k) {
    Matrix m(dst.betti(k), src.betti(k));
    for (std::size_t j = 0; j < src.betti(k); ++j) {
      const Vector image = f[k] * src.representatives(k).column(j);
      if (k > dst.top_degree()) continue;
      m.set_column(j, dst.reduce(image, k).coordinates);
    }
    out.degrees[k] = std::move(m);
  });
  return out;
}

CohomologyMap compose(const CohomologyMap& second, const CohomologyMap& first) {
  CohomologyMap out;
  for (std::size_t k = 0; k < first.degrees.size(); ++k) {
    if (k < second.degrees.size())
      out.degrees.push_back(second.degrees[k] * first.degrees[k]);
    else
      out.degrees.emplace_back(0, first.degrees[k].cols());
  }
  return out;
}

CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b, const CohomologySpace& space) {
  const ExteriorEmbedding* product = space.complex().product();
  if (!product) throw input_error("NoProduct", "complex carries no product");
  const std::size_t degree = a.degree + b.degree;
  if (degree > space.top_degree()) return {degree, {}};
  const Vector chain = product->multiply(a.degree, space.representative(a), b.degree, space.representative(b));
  return space.class_of(chain, degree);
}

std::vector<Matrix> generated_subalgebra(const CohomologySpace& space, const std::vector<CohomologyClass>& generators) {
  const std::size_t top = space.top_degree();
  std::vector<std::vector<Vector>> spans(top + 1);
  std::vector<CohomologyClass> frontier;
  auto try_add = [&](const CohomologyClass& c) {
    if (c.degree > top || is_zero(c.coordinates)) return;
    auto& span = spans[c.degree];
    span.push_back(c.coordinates);
    if (rank(Matrix::from_columns(space.betti(c.degree), span)) < span.size()) {
      span.pop_back();
      return;
    }
    frontier.push_back(c);
  };
  try_add(space.unit());
  for (const auto& g : generators) try_add(g);
  for (std::size_t next = 0; next < frontier.size(); ++next) {
    const CohomologyClass x = frontier[next];
    for (const auto& g : generators) {
      if (x.degree + g.degree > top) continue;
      try_add(cup_product(x, g, space));
    }
  }
  std::vector<Matrix> out;
  for (std::size_t k = 0; k <= top; ++k) out.push_back(Matrix::from_columns(space.betti(k), spans[k]));
  return out;
}

bool odd_generated(const CohomologySpace& space) {
  std::vector<CohomologyClass> odd;
  for (std::size_t k = 1; k <= space.top_degree(); k += 2)
    for (std::size_t j = 0; j < space.betti(k); ++j) odd.push_back(space.basis_class(k, j));
  const auto spans = generated_subalgebra(space, odd);
  for (std::size_t k = 0; k <= space.top_degree(); ++k)
    if (spans[k].cols() != space.betti(k)) return false;
  return true;
}

}  // namespace koszul
