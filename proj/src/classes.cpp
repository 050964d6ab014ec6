#include "koszul/classes.hpp"

#include <array>
#include <functional>
#include <span>

#include "koszul/builtins.hpp"
#include "koszul/error.hpp"
#include "koszul/relative.hpp"

namespace koszul {

namespace {

using IntMatrix = std::vector<long long>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t n) {
  IntMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i * n + l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + l] * b[l * n + j];
    }
  return c;
}

Form form_on_quotient(const PairContext& context, const CohomologyClass& c) {
  const Vector chain = context.relative_cohomology->representative(c);
  return Form::from_vector(context.pair.quotient_dim(), c.degree, context.quotient->invariants[c.degree] * chain);
}

std::size_t span_dim(const std::vector<Matrix>& spans, std::size_t degree) {
  return degree < spans.size() ? spans[degree].cols() : 0;
}

CohomologyClass product_of(const std::vector<CohomologyClass>& factors, const CohomologySpace& space) {
  CohomologyClass acc = space.unit();
  for (const auto& f : factors) acc = cup_product(acc, f, space);
  return acc;
}

bool check_presentation(const std::vector<CohomologyClass>& gens, const CohomologySpace& space) {
  if (gens.size() > 20) return false;
  const std::size_t top = space.top_degree();
  std::vector<std::vector<Vector>> by_degree(top + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::vector<CohomologyClass> factors;
    std::size_t degree = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mask >> i & 1) {
        factors.push_back(gens[i]);
        degree += gens[i].degree;
      }
    if (degree > top) return false;
    by_degree[degree].push_back(product_of(factors, space).coordinates);
  }
  for (std::size_t k = 0; k <= top; ++k) {
    if (by_degree[k].size() != space.betti(k)) return false;
    if (by_degree[k].empty()) continue;
    if (rank(Matrix::from_columns(space.betti(k), by_degree[k])) != space.betti(k)) return false;
  }
  return true;
}

}  // namespace

Form trace_form(std::size_t n, std::size_t k) {
  if (n == 0) throw input_error("DegreeOutOfRange", "gl(0) has no trace forms");
  const SubalgebraPair pair = gl_so_pair(n);
  const std::size_t r = pair.quotient_dim();
  if (k == 0 || 4 * k - 3 > r)
    throw input_error("DegreeOutOfRange", "trace form degree " + std::to_string(4 * k - 3) + " exceeds dim gl(n)/so(n) = " + std::to_string(r));
  const std::size_t degree = 4 * k - 3;

  std::vector<IntMatrix> sym;
  for (std::size_t b = 0; b < r; ++b) {
    const Vector col = pair.quotient_basis().column(b);
    IntMatrix m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      if (col[i].get_den() != 1 || !col[i].get_num().fits_slong_p())
        throw internal_error("TraceFormBasis", "symmetric basis is not integral");
      m[i] = col[i].get_num().get_si();
    }
    sym.push_back(std::move(m));
  }
  const auto product_trace = [&](std::span<const std::size_t> idx) -> Scalar {
    IntMatrix acc = sym[idx[0]];
    for (std::size_t i = 1; i < idx.size(); ++i) acc = multiply(acc, sym[idx[i]], n);
    long long t = 0;
    for (std::size_t i = 0; i < n; ++i) t += acc[i * n + i];
    return Scalar(static_cast<long>(t));
  };
  Form form = alternation(r, degree, product_trace);

  const Vector v = form.to_vector();
  if (!is_zero(quotient_differential(pair, degree) * v))
    throw internal_error("TraceFormNotClosed", "trace form of degree " + std::to_string(degree) + " is not closed");
  for (std::size_t c = 0; c < pair.sub_dim(); ++c)
    if (!is_zero(derivation_matrix(pair.action()[c], degree) * v))
      throw internal_error("TraceFormNotInvariant", "trace form of degree " + std::to_string(degree) + " is not invariant");
  return form;
}

Scalar pfaffian(const Matrix& a) {
  if (a.rows() != a.cols()) throw input_error("NotSkewSymmetric", "matrix is not square");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (a(i, j) != -a(j, i)) throw validation_error("NotSkewSymmetric", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks skew symmetry");
  if (a.rows() % 2 != 0) throw validation_error("OddSize", "Pfaffian needs even size, got " + std::to_string(a.rows()));

  std::vector<std::size_t> all(a.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const std::function<Scalar(const std::vector<std::size_t>&)> expand = [&](const std::vector<std::size_t>& idx) -> Scalar {
    if (idx.empty()) return Scalar(1);
    Scalar total = 0;
    for (std::size_t j = 1; j < idx.size(); ++j) {
      const Scalar& entry = a(idx[0], idx[j]);
      if (entry == 0) continue;
      std::vector<std::size_t> rest;
      for (std::size_t l = 1; l < idx.size(); ++l)
        if (l != j) rest.push_back(idx[l]);
      const Scalar term = entry * expand(rest);
      if (j % 2 == 1) total += term;
      else total -= term;
    }
    return total;
  };
  return expand(all);
}

PfaffianClass pfaffian_class(std::size_t m) {
  if (m == 0) throw input_error("DegreeOutOfRange", "m must be positive");
  const PairContext context = make_context(gl_so_pair(2 * m), false);
  const CohomologySpace& space = *context.relative_cohomology;
  const std::size_t degree = 2 * m;

  std::vector<CohomologyClass> odd;
  for (std::size_t k = 1; k <= space.top_degree(); k += 2)
    for (std::size_t j = 0; j < space.betti(k); ++j) odd.push_back(space.basis_class(k, j));
  const std::vector<Matrix> odd_span = generated_subalgebra(space, odd);
  const std::size_t have = span_dim(odd_span, degree);
  if (have == space.betti(degree))
    throw validation_error("NoEvenGenerator", "odd classes already span degree " + std::to_string(degree));

  // first basis class outside the odd span
  PfaffianClass out{context.pair, {}, {}, false, false};
  const Matrix& span = odd_span[degree];
  for (std::size_t j = 0; j < space.betti(degree); ++j) {
    const Vector e = unit_vector(space.betti(degree), j);
    if (span.cols() == 0 || rank(hstack(span, Matrix::from_columns(e.size(), {e}))) > span.cols()) {
      out.cls = {degree, e};
      break;
    }
  }
  out.unique = space.betti(degree) - have == 1;
  out.representative = form_on_quotient(context, out.cls);
  std::vector<CohomologyClass> all = odd;
  all.push_back(out.cls);
  const std::vector<Matrix> full = generated_subalgebra(space, all);
  out.completes_ring = true;
  for (std::size_t k = 0; k <= space.top_degree(); ++k)
    if (span_dim(full, k) != space.betti(k)) out.completes_ring = false;
  return out;
}

std::string generator_label(std::size_t degree) {
  if (degree % 4 == 1) return "y" + std::to_string((degree + 1) / 2);
  if (degree % 2 == 0) return "y" + std::to_string(degree);
  return "x" + std::to_string(degree);
}

GeneratorReport identify_generators(const SubalgebraPair& pair) { return identify_generators(make_context(pair, false)); }

GeneratorReport identify_generators(const PairContext& context) {
  const CohomologySpace& space = *context.relative_cohomology;
  GeneratorReport out{context.pair, space.betti_numbers(), {}, false};
  std::vector<CohomologyClass> gens;
  for (std::size_t k = 1; k <= space.top_degree(); ++k) {
    if (space.betti(k) == 0) continue;
    const std::vector<Matrix> spans = generated_subalgebra(space, gens);
    Matrix span = k < spans.size() ? spans[k] : Matrix(space.betti(k), 0);
    for (std::size_t j = 0; j < space.betti(k) && span.cols() < space.betti(k); ++j) {
      const Matrix e = Matrix::from_columns(space.betti(k), {unit_vector(space.betti(k), j)});
      const Matrix grown = hstack(span, e);
      if (rank(grown) == span.cols()) continue;
      span = grown;
      CohomologyClass c{k, unit_vector(space.betti(k), j)};
      out.generators.push_back({k, generator_label(k), c, form_on_quotient(context, c)});
      gens.push_back(std::move(c));
    }
  }
  out.exterior_presentation = check_presentation(gens, space);
  return out;
}

}  // namespace koszul
