#include "koszul/exterior.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "koszul/error.hpp"

namespace koszul {

MultiIndex::MultiIndex(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t a = 0; a < indices_.size(); ++a) {
    if (indices_[a] >= kMaxExteriorDim || (a > 0 && indices_[a - 1] >= indices_[a]))
      throw input_error("InvalidMultiIndex", "multi-index must be strictly increasing with entries below 64");
    mask_ |= std::uint64_t{1} << indices_[a];
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExteriorBasis::ExteriorBasis(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  if (dim > kMaxExteriorDim) throw input_error("DimensionTooLarge", "exterior algebras are limited to 64 generators");
  if (degree > dim) return;
  std::vector<std::size_t> current(degree);
  std::iota(current.begin(), current.end(), std::size_t{0});
  while (true) {
    elements_.emplace_back(current);
    position_.emplace(elements_.back().mask(), elements_.size() - 1);
    // advance to the next combination in lexicographic order
    std::size_t pos = degree;
    while (pos > 0 && current[pos - 1] == dim - degree + pos - 1) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t a = pos; a < degree; ++a) current[a] = current[a - 1] + 1;
  }
}

std::size_t ExteriorBasis::index_of(const MultiIndex& m) const { return index_of_mask(m.mask()); }

std::size_t ExteriorBasis::index_of_mask(std::uint64_t mask) const {
  const auto it = position_.find(mask);
  if (it == position_.end()) throw internal_error("InvalidMultiIndex", "multi-index not in basis");
  return it->second;
}

const ExteriorBasis& exterior_basis(std::size_t dim, std::size_t degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<ExteriorBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dim, degree}];
  if (!slot) slot = std::make_unique<ExteriorBasis>(dim, degree);
  return *slot;
}

int sort_sign(std::vector<std::size_t>& seq) {
  int sign = 1;
  // insertion sort counting transpositions; sequences are short
  for (std::size_t a = 1; a < seq.size(); ++a) {
    for (std::size_t b = a; b > 0 && seq[b - 1] >= seq[b]; --b) {
      if (seq[b - 1] == seq[b]) return 0;
      std::swap(seq[b - 1], seq[b]);
      sign = -sign;
    }
  }
  for (std::size_t a = 1; a < seq.size(); ++a)
    if (seq[a - 1] == seq[a]) return 0;
  return sign;
}

Form::Form(std::size_t ambient_dim, std::size_t degree) : dim_(ambient_dim), degree_(degree) {
  if (ambient_dim > kMaxExteriorDim) throw input_error("DimensionTooLarge", "exterior algebras are limited to 64 generators");
}

Form Form::basis_form(std::size_t ambient_dim, const MultiIndex& index) {
  Form f(ambient_dim, index.degree());
  f.add_term(index, Scalar(1));
  return f;
}

Form Form::covector(std::size_t ambient_dim, std::size_t i) { return basis_form(ambient_dim, MultiIndex({i})); }

Form Form::from_vector(std::size_t ambient_dim, std::size_t degree, const Vector& coeffs) {
  const ExteriorBasis& basis = exterior_basis(ambient_dim, degree);
  if (coeffs.size() != basis.size()) throw internal_error("DimensionMismatch", "coefficient vector has the wrong length");
  Form f(ambient_dim, degree);
  for (std::size_t a = 0; a < coeffs.size(); ++a)
    if (!koszul::is_zero(coeffs[a])) f.terms_.emplace(basis[a], coeffs[a]);
  return f;
}

Scalar Form::coefficient(const MultiIndex& index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::add_term(const MultiIndex& index, const Scalar& value) {
  if (index.degree() != degree_ || (degree_ > 0 && index.indices().back() >= dim_))
    throw input_error("DimensionMismatch", "multi-index does not fit the form");
  if (koszul::is_zero(value)) return;
  auto [it, inserted] = terms_.emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (koszul::is_zero(it->second)) terms_.erase(it);
  }
}

Vector Form::to_vector() const {
  const ExteriorBasis& basis = exterior_basis(dim_, degree_);
  Vector v(basis.size());
  for (const auto& [index, value] : terms_) v[basis.index_of(index)] = value;
  return v;
}

Scalar Form::evaluate(const std::vector<Vector>& vectors) const {
  if (vectors.size() != degree_) throw input_error("DimensionMismatch", "form evaluated on the wrong number of vectors");
  for (const auto& v : vectors)
    if (v.size() != dim_) throw input_error("DimensionMismatch", "vector length differs from form ambient dimension");
  Scalar total = 0;
  for (const auto& [index, value] : terms_) {
    Matrix minor(degree_, degree_);
    for (std::size_t a = 0; a < degree_; ++a)
      for (std::size_t b = 0; b < degree_; ++b) minor(a, b) = vectors[b][index.indices()[a]];
    total += value * determinant(minor);
  }
  return total;
}

void Form::check_compatible(const Form& other) const {
  if (dim_ != other.dim_ || degree_ != other.degree_) throw input_error("DimensionMismatch", "forms differ in dimension or degree");
}

Form Form::operator+(const Form& other) const {
  check_compatible(other);
  Form out = *this;
  for (const auto& [index, value] : other.terms_) out.add_term(index, value);
  return out;
}

Form Form::operator-(const Form& other) const { return *this + Scalar(-1) * other; }

Form operator*(const Scalar& s, const Form& f) {
  Form out(f.dim_, f.degree_);
  if (koszul::is_zero(s)) return out;
  for (const auto& [index, value] : f.terms_) out.terms_.emplace(index, s * value);
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw input_error("DimensionMismatch", "wedge of forms on different spaces");
  Form out(a.ambient_dim(), a.degree() + b.degree());
  std::vector<std::size_t> seq;
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) {
      if (i.mask() & j.mask()) continue;
      seq = i.indices();
      seq.insert(seq.end(), j.indices().begin(), j.indices().end());
      const int sign = sort_sign(seq);
      out.add_term(MultiIndex(seq), sign > 0 ? Scalar(x * y) : Scalar(-(x * y)));
    }
  return out;
}

Form interior(const Vector& x, const Form& a) {
  if (x.size() != a.ambient_dim()) throw input_error("DimensionMismatch", "interior product vector has the wrong length");
  if (a.degree() == 0) return Form(a.ambient_dim(), 0);
  Form out(a.ambient_dim(), a.degree() - 1);
  for (const auto& [index, value] : a.terms()) {
    const auto& ids = index.indices();
    for (std::size_t p = 0; p < ids.size(); ++p) {
      if (koszul::is_zero(x[ids[p]])) continue;
      std::vector<std::size_t> rest = ids;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      const Scalar c = x[ids[p]] * value;
      out.add_term(MultiIndex(std::move(rest)), p % 2 == 0 ? c : Scalar(-c));
    }
  }
  return out;
}

Form lie_derivative(const LieAlgebra& g, const Vector& x, const Form& a) {
  if (x.size() != g.dim() || a.ambient_dim() != g.dim())
    throw input_error("DimensionMismatch", "Lie derivative arguments live on different spaces");
  return Form::from_vector(g.dim(), a.degree(), lie_derivative_matrix(g, x, a.degree()) * a.to_vector());
}

Form pullback(const Form& a, const Matrix& linear_map) {
  if (linear_map.rows() != a.ambient_dim()) throw input_error("DimensionMismatch", "pullback map does not land in the form's space");
  const std::size_t v_dim = linear_map.cols();
  std::vector<Form> pulled(a.ambient_dim());
  std::vector<bool> ready(a.ambient_dim(), false);
  Form out(v_dim, a.degree());
  for (const auto& [index, value] : a.terms()) {
    Form product(v_dim, 0);
    product.add_term(MultiIndex(), Scalar(1));
    for (std::size_t w : index.indices()) {
      if (!ready[w]) {
        Form cov(v_dim, 1);
        for (std::size_t v = 0; v < v_dim; ++v) cov.add_term(MultiIndex({v}), linear_map(w, v));
        pulled[w] = std::move(cov);
        ready[w] = true;
      }
      product = wedge(product, pulled[w]);
      if (product.is_zero()) break;
    }
    if (!product.is_zero()) out = out + value * product;
  }
  return out;
}

Matrix interior_matrix(const Vector& x, std::size_t degree) {
  const std::size_t n = x.size();
  const ExteriorBasis& src = exterior_basis(n, degree);
  if (degree == 0) return Matrix(0, src.size());
  const ExteriorBasis& dst = exterior_basis(n, degree - 1);
  Matrix m(dst.size(), src.size());
  for (std::size_t row = 0; row < dst.size(); ++row) {
    const MultiIndex& rest = dst[row];
    for (std::size_t i = 0; i < n; ++i) {
      if (koszul::is_zero(x[i]) || rest.contains(i)) continue;
      const std::uint64_t mask = rest.mask() | (std::uint64_t{1} << i);
      const auto pos = static_cast<std::size_t>(std::count_if(rest.indices().begin(), rest.indices().end(),
                                                              [i](std::size_t r) { return r < i; }));
      const std::size_t col = src.index_of_mask(mask);
      if (pos % 2 == 0)
        m(row, col) += x[i];
      else
        m(row, col) -= x[i];
    }
  }
  return m;
}

Matrix derivation_matrix(const Matrix& endomorphism, std::size_t degree) {
  const std::size_t n = endomorphism.rows();
  if (endomorphism.cols() != n) throw input_error("DimensionMismatch", "derivation needs a square matrix");
  const ExteriorBasis& basis = exterior_basis(n, degree);
  Matrix m(basis.size(), basis.size());
  std::vector<std::size_t> seq;
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const auto& ids = basis[row].indices();
    for (std::size_t p = 0; p < ids.size(); ++p) {
      for (std::size_t target = 0; target < n; ++target) {
        const Scalar& coef = endomorphism(target, ids[p]);
        if (koszul::is_zero(coef)) continue;
        seq = ids;
        seq[p] = target;
        const int sign = sort_sign(seq);
        if (sign == 0) continue;
        const std::size_t col = basis.index_of(MultiIndex(seq));
        if (sign > 0)
          m(row, col) -= coef;
        else
          m(row, col) += coef;
      }
    }
  }
  return m;
}

Matrix lie_derivative_matrix(const LieAlgebra& g, const Vector& x, std::size_t degree) {
  return derivation_matrix(g.ad(x), degree);
}

Matrix ce_differential(const BracketTable& table, std::size_t degree) {
  const std::size_t n = table.dim();
  const ExteriorBasis& src = exterior_basis(n, degree);
  const ExteriorBasis& dst = exterior_basis(n, degree + 1);
  Matrix m(dst.size(), src.size());
  std::vector<std::size_t> rest;
  for (std::size_t row = 0; row < dst.size(); ++row) {
    const auto& ids = dst[row].indices();
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        const auto& br = table(ids[a], ids[b]);
        if (br.empty()) continue;
        rest.clear();
        for (std::size_t t = 0; t < ids.size(); ++t)
          if (t != a && t != b) rest.push_back(ids[t]);
        const MultiIndex rest_index(rest);
        const bool pair_sign_negative = (a + b) % 2 == 1;
        for (const Term& term : br) {
          if (rest_index.contains(term.index)) continue;
          const auto pos = static_cast<std::size_t>(
              std::count_if(rest.begin(), rest.end(), [&](std::size_t r) { return r < term.index; }));
          const std::size_t col = src.index_of_mask(rest_index.mask() | (std::uint64_t{1} << term.index));
          if (pair_sign_negative != (pos % 2 == 1))
            m(row, col) -= term.coefficient;
          else
            m(row, col) += term.coefficient;
        }
      }
  }
  return m;
}

Matrix ce_differential(const LieAlgebra& g, std::size_t degree) { return ce_differential(g.table(), degree); }

Matrix pullback_matrix(const Matrix& linear_map, std::size_t degree) {
  const std::size_t w_dim = linear_map.rows();
  const std::size_t v_dim = linear_map.cols();
  const ExteriorBasis& src = exterior_basis(w_dim, degree);
  const ExteriorBasis& dst = exterior_basis(v_dim, degree);
  Matrix m(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const Form image = pullback(Form::basis_form(w_dim, src[col]), linear_map);
    for (const auto& [index, value] : image.terms()) m(dst.index_of(index), col) = value;
  }
  return m;
}

Form alternation(std::size_t ambient_dim, std::size_t degree,
                 const std::function<Scalar(std::span<const std::size_t>)>& multilinear) {
  const ExteriorBasis& basis = exterior_basis(ambient_dim, degree);
  Form out(ambient_dim, degree);
  std::vector<std::size_t> perm(degree);
  std::vector<std::size_t> args(degree);
  for (const MultiIndex& index : basis.elements()) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Scalar total = 0;
    do {
      std::vector<std::size_t> tmp = perm;
      const int sign = sort_sign(tmp);
      for (std::size_t a = 0; a < degree; ++a) args[a] = index.indices()[perm[a]];
      const Scalar value = multilinear(args);
      if (sign > 0)
        total += value;
      else
        total -= value;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.add_term(index, total);
  }
  return out;
}

Form alternation(std::size_t ambient_dim, std::size_t degree, const std::map<std::vector<std::size_t>, Scalar>& table) {
  return alternation(ambient_dim, degree, [&table](std::span<const std::size_t> args) {
    const auto it = table.find(std::vector<std::size_t>(args.begin(), args.end()));
    return it == table.end() ? Scalar(0) : it->second;
  });
}

Vector wedge_vectors(std::size_t ambient_dim, std::size_t p, const Vector& a, std::size_t q, const Vector& b) {
  return wedge(Form::from_vector(ambient_dim, p, a), Form::from_vector(ambient_dim, q, b)).to_vector();
}

}  // namespace koszul
