#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liecohom/exterior.hpp"
#include "liecohom/lie_algebra.hpp"
#include "liecohom/linalg.hpp"

namespace liecohom {

/// Bilinear form given by its Gram matrix. A symmetric form (B) is checked
/// to equal its transpose; a non-symmetric one (omega) is checked to be
/// antisymmetric. The inverse Gram matrix is cached when it exists.
class BilinearForm {
 public:
  enum class Kind { symmetric, antisymmetric };

  BilinearForm() = default;
  /// Throws BadParameter when the matrix is not square or lacks the
  /// requested symmetry.
  BilinearForm(Matrix gram, Kind kind);

  static BilinearForm symmetric(Matrix gram) { return {std::move(gram), Kind::symmetric}; }
  static BilinearForm antisymmetric(Matrix gram) { return {std::move(gram), Kind::antisymmetric}; }
  /// Antisymmetric form whose Gram matrix has omega(e_a, e_b) = coefficient
  /// of w_a ^ w_b for a < b. Throws BadParameter unless f is a 2-form.
  static BilinearForm from_two_form(const ExteriorForm& f);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  bool is_symmetric() const { return kind_ == Kind::symmetric; }
  bool is_nondegenerate() const { return inverse_.has_value(); }
  /// Throws DegenerateForm when singular.
  const Matrix& inverse_gram() const;

  Scalar operator()(const Vector& x, const Vector& y) const;

  /// The 2-form sum_{a<b} omega(e_a, e_b) w_a ^ w_b (antisymmetric forms only).
  ExteriorForm to_two_form() const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.kind_ == b.kind_ && a.gram_ == b.gram_;
  }

 private:
  Matrix gram_;
  Kind kind_ = Kind::symmetric;
  std::optional<Matrix> inverse_;
};

/// Endomorphism of g; column b of `matrix` is the image of e_b.
struct LinearEndo {
  Matrix matrix;

  std::size_t dim() const { return matrix.rows(); }
  Vector apply(const Vector& v) const { return matrix.apply(v); }
  /// Row-major coordinates in End(g), entry (a, b) at a * dim + b.
  const Vector& coordinates() const { return matrix.flat(); }
  static LinearEndo from_coordinates(std::size_t dim, const Vector& coords);

  friend bool operator==(const LinearEndo& a, const LinearEndo& b) = default;
};

/// Lie bracket of endomorphisms, DD' - D'D.
LinearEndo commutator(const LinearEndo& a, const LinearEndo& b);

/// B([X, Y], Z) = B(X, [Y, Z]) on every basis triple.
bool is_invariant_form(const LieAlgebra& g, const BilinearForm& form);

/// Validates (g, B) as quadratic; throws FormNotInvariant or DegenerateForm.
void require_quadratic(const LieAlgebra& g, const BilinearForm& form);

bool is_derivation(const LieAlgebra& g, const LinearEndo& d);
/// B(DX, Y) = -B(X, DY) for all basis vectors.
bool is_skew(const BilinearForm& form, const LinearEndo& d);

/// Der(g) as a subspace of End(g) coordinates (dimension dim^2).
Subspace derivation_space(const LieAlgebra& g);
/// Der_a(g, B); throws FormNotInvariant when B is not invariant.
Subspace skew_derivation_space(const LieAlgebra& g, const BilinearForm& form);
/// span{ad(e_i)} in End(g) coordinates.
Subspace inner_derivations(const LieAlgebra& g);

/// Omega(X, Y) = B(DX, Y). Throws NotSkewDerivation unless D is a skew
/// derivation of (g, B).
ExteriorForm skew_derivation_to_two_form(const LieAlgebra& g, const BilinearForm& form,
                                         const LinearEndo& d);
/// Inverse of the above; throws NotSkewDerivation unless omega is a 2-form
/// with {I, omega} = 0.
LinearEndo two_form_to_skew_derivation(const LieAlgebra& g, const BilinearForm& form,
                                       const ExteriorForm& omega);

/// Endomorphism D with omega(X, Y) = B(DX, Y); no derivation check.
LinearEndo endo_of_two_form(const BilinearForm& form, const BilinearForm& omega);

/// True iff omega is nondegenerate and
///   omega([X,Y],Z) + omega([Y,Z],X) + omega([Z,X],Y) = 0
/// on all basis triples. (g, B) must be quadratic.
bool symplectic_check(const LieAlgebra& g, const BilinearForm& form, const BilinearForm& omega);

/// The map ad(X) -> ad(phi^{-1}(i_X omega)) on ad(g), phi(X) = B(X, .).
struct AdDerivation {
  /// Echelon basis of ad(g) in End(g) coordinates.
  Subspace ad_basis;
  /// representatives[t] is some X with ad(X) = ad_basis.basis()[t].
  std::vector<Vector> representatives;
  /// X -> phi^{-1}(i_X omega) on g.
  LinearEndo lift;
  /// Matrix of the induced map in ad_basis coordinates.
  Matrix matrix;
  bool leibniz = false;
  bool invertible = false;
  /// Diagnostics against the derivation D of omega: whether the induced map
  /// equals ad X -> [ad X, D], resp. ad X -> [D, ad X], on every basis vector.
  bool equals_ad_commutator = false;
  bool equals_derivation_commutator = false;

  /// Image of ad(x) under the induced map, as an End(g) matrix.
  Matrix apply_to_ad(const LieAlgebra& g, const Vector& x) const;
};

/// Throws NotSymplectic when symplectic_check fails and
/// WellDefinednessFailure when the result depends on the representative.
AdDerivation symplectic_ad_derivation(const LieAlgebra& g, const BilinearForm& form,
                                      const BilinearForm& omega);

}  // namespace liecohom
