#include "liecohom/forms.hpp"

#include <algorithm>

#include "liecohom/errors.hpp"

namespace liecohom {
namespace {

Vector flatten(const Matrix& m) { return m.flat(); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  // Augmented system [a | b]; inconsistent iff a pivot lands in the last column.
  SparseMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.add(r, c, a(r, c));
    aug.add(r, a.cols(), b[r]);
  }
  std::vector<std::size_t> pivots;
  const auto rows = reduced_row_echelon(aug.all_rows(), pivots);
  Vector x(a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;
    for (const auto& [c, v] : rows[i])
      if (c == a.cols()) x[pivots[i]] = v;
  }
  return x;
}

}  // namespace

// ------------------------------------------------------------ BilinearForm

BilinearForm::BilinearForm(Matrix gram, Kind kind) : gram_(std::move(gram)), kind_(kind) {
  if (gram_.rows() != gram_.cols()) throw BadParameter("Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j) {
      const bool ok = kind_ == Kind::symmetric ? gram_(i, j) == gram_(j, i)
                                               : gram_(i, j) == -gram_(j, i);
      if (!ok)
        throw BadParameter(kind_ == Kind::symmetric ? "Gram matrix is not symmetric"
                                                    : "Gram matrix is not antisymmetric");
    }
  if (rank_exact(gram_) == gram_.rows()) inverse_ = inverse(gram_);
}

BilinearForm BilinearForm::from_two_form(const ExteriorForm& f) {
  const std::size_t n = f.dim();
  Matrix m(n, n);
  for (const auto& [mono, c] : f.terms()) {
    if (degree_of(mono) != 2) throw BadParameter("from_two_form: not a 2-form");
    const auto a = static_cast<std::size_t>(__builtin_ctzll(mono));
    const auto b = static_cast<std::size_t>(63 - __builtin_clzll(mono));
    m(a, b) = c;
    m(b, a) = -c;
  }
  return antisymmetric(std::move(m));
}

const Matrix& BilinearForm::inverse_gram() const {
  if (!inverse_) throw DegenerateForm("bilinear form is degenerate");
  return *inverse_;
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("form evaluation: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!is_zero(y[j])) s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

ExteriorForm BilinearForm::to_two_form() const {
  if (kind_ != Kind::antisymmetric) throw BadParameter("to_two_form needs an antisymmetric form");
  ExteriorForm f(dim());
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b)
      f.add_term((Monomial{1} << a) | (Monomial{1} << b), gram_(a, b));
  return f;
}

// -------------------------------------------------------------- LinearEndo

LinearEndo LinearEndo::from_coordinates(std::size_t dim, const Vector& coords) {
  return {Matrix::from_flat(dim, dim, coords)};
}

LinearEndo commutator(const LinearEndo& a, const LinearEndo& b) {
  return {commutator(a.matrix, b.matrix)};
}

// -------------------------------------------------------------- predicates

bool is_invariant_form(const LieAlgebra& g, const BilinearForm& form) {
  const std::size_t n = g.dim();
  if (form.dim() != n) throw DimensionMismatch("form dimension does not match algebra");
  const Matrix& gram = form.gram();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar lhs = 0, rhs = 0;
        for (const auto& [l, c] : g.bracket_basis(x, y)) lhs += c * gram(l, z);
        for (const auto& [l, c] : g.bracket_basis(y, z)) rhs += c * gram(x, l);
        if (lhs != rhs) return false;
      }
  return true;
}

void require_quadratic(const LieAlgebra& g, const BilinearForm& form) {
  if (!form.is_symmetric()) throw BadParameter("quadratic structure must be symmetric");
  if (!is_invariant_form(g, form)) throw FormNotInvariant("bilinear form is not invariant");
  if (!form.is_nondegenerate()) throw DegenerateForm("bilinear form is degenerate");
}

bool is_derivation(const LieAlgebra& g, const LinearEndo& d) {
  const std::size_t n = g.dim();
  if (d.dim() != n) throw DimensionMismatch("endomorphism dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ei = g.basis_vector(i), ej = g.basis_vector(j);
      const Vector lhs = d.apply(bracket(g, ei, ej));
      Vector rhs = bracket(g, d.apply(ei), ej);
      const Vector second = bracket(g, ei, d.apply(ej));
      for (std::size_t l = 0; l < n; ++l) rhs[l] += second[l];
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_skew(const BilinearForm& form, const LinearEndo& d) {
  const Matrix dtg = d.matrix.transpose() * form.gram();
  const Matrix gd = form.gram() * d.matrix;
  return (dtg + gd).is_zero();
}

// ------------------------------------------------------- derivation spaces

namespace {

// Rows of the linear system D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] in the
// unknowns M(a, b) at a * n + b.
void append_derivation_rows(const LieAlgebra& g, std::vector<SparseVector>& rows) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseMatrix eq(n, n * n);
      for (const auto& [m, c] : g.bracket_basis(i, j))
        for (std::size_t l = 0; l < n; ++l) eq.add(l, l * n + m, c);
      for (std::size_t m = 0; m < n; ++m) {
        for (const auto& [l, c] : g.bracket_basis(m, j)) eq.add(l, m * n + i, -c);
        for (const auto& [l, c] : g.bracket_basis(i, m)) eq.add(l, m * n + j, -c);
      }
      for (auto& r : eq.mutable_rows())
        if (!r.empty()) rows.push_back(std::move(r));
    }
}

void append_skew_rows(const BilinearForm& form, std::vector<SparseVector>& rows) {
  const std::size_t n = form.dim();
  const Matrix& gram = form.gram();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      SparseMatrix eq(1, n * n);
      for (std::size_t m = 0; m < n; ++m) {
        eq.add(0, m * n + a, gram(m, b));
        eq.add(0, m * n + b, gram(a, m));
      }
      if (!eq.row(0).empty()) rows.push_back(eq.row(0));
    }
}

Subspace solve_rows(std::size_t unknowns, std::vector<SparseVector> rows) {
  SparseMatrix m(rows.size(), unknowns);
  m.mutable_rows() = std::move(rows);
  return kernel_basis(m);
}

}  // namespace

Subspace derivation_space(const LieAlgebra& g) {
  std::vector<SparseVector> rows;
  append_derivation_rows(g, rows);
  return solve_rows(g.dim() * g.dim(), std::move(rows));
}

Subspace skew_derivation_space(const LieAlgebra& g, const BilinearForm& form) {
  if (!is_invariant_form(g, form)) throw FormNotInvariant("skew_derivation_space: form is not invariant");
  std::vector<SparseVector> rows;
  append_derivation_rows(g, rows);
  append_skew_rows(form, rows);
  return solve_rows(g.dim() * g.dim(), std::move(rows));
}

Subspace inner_derivations(const LieAlgebra& g) {
  std::vector<Vector> ads;
  for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(flatten(adjoint(g, i)));
  return Subspace::span(g.dim() * g.dim(), ads);
}

// ------------------------------------------------ derivations <-> 2-forms

ExteriorForm skew_derivation_to_two_form(const LieAlgebra& g, const BilinearForm& form,
                                         const LinearEndo& d) {
  if (d.dim() != g.dim() || form.dim() != g.dim())
    throw DimensionMismatch("skew_derivation_to_two_form: dimension mismatch");
  if (!is_derivation(g, d) || !is_skew(form, d))
    throw NotSkewDerivation("endomorphism is not a skew-symmetric derivation");
  const Matrix w = d.matrix.transpose() * form.gram();  // w(a,b) = B(De_a, e_b)
  ExteriorForm f(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b)
      f.add_term((Monomial{1} << a) | (Monomial{1} << b), w(a, b));
  return f;
}

LinearEndo endo_of_two_form(const BilinearForm& form, const BilinearForm& omega) {
  // omega = D^T G  =>  D = G^{-1} omega^T.
  return {form.inverse_gram() * omega.gram().transpose()};
}

LinearEndo two_form_to_skew_derivation(const LieAlgebra& g, const BilinearForm& form,
                                       const ExteriorForm& omega) {
  if (omega.dim() != g.dim()) throw DimensionMismatch("two_form_to_skew_derivation: dimension mismatch");
  if (!omega.is_zero() && omega.degrees() != std::vector<std::size_t>{2})
    throw NotSkewDerivation("form is not of degree 2");
  require_quadratic(g, form);
  if (!super_poisson(form, three_form(g, form), omega).is_zero())
    throw NotSkewDerivation("2-form is not closed under {I, .}");
  return endo_of_two_form(form, BilinearForm::from_two_form(omega));
}

// -------------------------------------------------------------- symplectic

bool symplectic_check(const LieAlgebra& g, const BilinearForm& form, const BilinearForm& omega) {
  require_quadratic(g, form);
  if (omega.is_symmetric()) throw BadParameter("symplectic_check: omega must be antisymmetric");
  if (omega.dim() != g.dim()) throw DimensionMismatch("symplectic_check: dimension mismatch");
  if (!omega.is_nondegenerate()) return false;
  const Matrix& w = omega.gram();
  const std::size_t n = g.dim();
  auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
    Scalar s = 0;
    for (const auto& [l, c] : g.bracket_basis(x, y)) s += c * w(l, z);
    return s;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (!is_zero(term(x, y, z) + term(y, z, x) + term(z, x, y))) return false;
  return true;
}

Matrix AdDerivation::apply_to_ad(const LieAlgebra& g, const Vector& x) const {
  return adjoint(g, lift.apply(x));
}

AdDerivation symplectic_ad_derivation(const LieAlgebra& g, const BilinearForm& form,
                                      const BilinearForm& omega) {
  if (!symplectic_check(g, form, omega)) throw NotSymplectic("omega is not a symplectic structure");
  const std::size_t n = g.dim();
  AdDerivation out;
  // phi^{-1}(i_X omega): (i_X omega)(e_b) = sum_a x_a omega(e_a, e_b).
  out.lift = {form.inverse_gram() * omega.gram().transpose()};

  const Subspace centre = center(g);
  for (const auto& z : centre.basis())
    if (!adjoint(g, out.lift.apply(z)).is_zero())
      throw WellDefinednessFailure("induced map on ad(g) depends on the representative");

  out.ad_basis = inner_derivations(g);
  Matrix ad_columns(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector a = flatten(adjoint(g, i));
    for (std::size_t r = 0; r < n * n; ++r) ad_columns(r, i) = a[r];
  }
  for (const auto& b : out.ad_basis.basis()) {
    auto x = solve(ad_columns, b);
    if (!x) throw Error("ad(g) basis vector has no preimage");
    out.representatives.push_back(std::move(*x));
  }

  const std::size_t r = out.ad_basis.dim();
  out.matrix = Matrix(r, r);
  std::vector<Matrix> images;
  for (std::size_t t = 0; t < r; ++t) {
    images.push_back(out.apply_to_ad(g, out.representatives[t]));
    const Vector coords = out.ad_basis.coordinates(flatten(images.back()));
    for (std::size_t s = 0; s < r; ++s) out.matrix(s, t) = coords[s];
  }

  out.leibniz = true;
  for (std::size_t s = 0; s < r && out.leibniz; ++s)
    for (std::size_t t = 0; t < r; ++t) {
      const Matrix as = Matrix::from_flat(n, n, out.ad_basis.basis()[s]);
      const Matrix at = Matrix::from_flat(n, n, out.ad_basis.basis()[t]);
      const Vector xy = bracket(g, out.representatives[s], out.representatives[t]);
      const Matrix lhs = out.apply_to_ad(g, xy);
      const Matrix rhs = commutator(images[s], at) + commutator(as, images[t]);
      if (!(lhs == rhs)) {
        out.leibniz = false;
        break;
      }
    }
  out.invertible = rank_exact(out.matrix) == r;

  const Matrix d = endo_of_two_form(form, omega).matrix;
  out.equals_ad_commutator = true;
  out.equals_derivation_commutator = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix ad = adjoint(g, i);
    const Matrix image = out.apply_to_ad(g, g.basis_vector(i));
    if (!(image == commutator(ad, d))) out.equals_ad_commutator = false;
    if (!(image == commutator(d, ad))) out.equals_derivation_commutator = false;
  }
  return out;
}

}  // namespace liecohom
