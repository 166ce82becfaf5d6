#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "liecohom/lie_algebra.hpp"
#include "liecohom/linalg.hpp"

namespace liecohom {

class BilinearForm;

/// Index subset {i_1 < ... < i_k} of the dual basis, bit t set iff t is in
/// the subset. Numeric order of masks of equal popcount is colexicographic.
using Monomial = std::uint64_t;

/// Largest supported dual-basis size.
inline constexpr std::size_t kMaxExteriorDim = 63;

inline std::size_t degree_of(Monomial m) { return static_cast<std::size_t>(__builtin_popcountll(m)); }

/// All k-subsets of {0..n-1} in colex order.
std::vector<Monomial> monomial_basis(std::size_t n, std::size_t k);

/// Position of m in monomial_basis(n, degree_of(m)).
std::size_t monomial_index(Monomial m);

/// Element of the exterior algebra over an n-dimensional dual basis, stored
/// sparsely as monomial -> nonzero coefficient.
class ExteriorForm {
 public:
  explicit ExteriorForm(std::size_t dim = 0);

  static ExteriorForm scalar(std::size_t dim, const Scalar& c);
  static ExteriorForm covector(std::size_t dim, std::size_t i);
  /// w_{i_1} ^ ... ^ w_{i_k} in the given (not necessarily sorted) order;
  /// zero when an index repeats.
  static ExteriorForm monomial(std::size_t dim, std::initializer_list<std::size_t> indices);
  static ExteriorForm monomial(std::size_t dim, const std::vector<std::size_t>& indices);
  static ExteriorForm from_mask(std::size_t dim, Monomial m, const Scalar& c = 1);
  /// Degree-k form with coordinates `coords` in monomial_basis(dim, k).
  static ExteriorForm from_coordinates(std::size_t dim, std::size_t k, const Vector& coords);

  std::size_t dim() const { return dim_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Monomial m) const;

  /// Adds c to the coefficient of m, pruning zeros.
  void add_term(Monomial m, const Scalar& c);

  ExteriorForm slice(std::size_t k) const;
  std::vector<std::size_t> degrees() const;
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous form; throws BadParameter otherwise.
  std::size_t degree() const;

  /// Coordinates of the degree-k slice in monomial_basis(dim, k).
  Vector coordinates(std::size_t k) const;

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  ExteriorForm& operator*=(const Scalar& s);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator-(ExteriorForm a) { return a *= Scalar(-1); }
  friend ExteriorForm operator*(const Scalar& s, ExteriorForm a) { return a *= s; }
  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) = default;

 private:
  std::size_t dim_;
  std::map<Monomial, Scalar> terms_;
};

/// Names of the dual basis covectors, used for printing forms.
class DualBasisFrame {
 public:
  explicit DualBasisFrame(std::vector<std::string> labels) : labels_(std::move(labels)) {}
  /// Covector of basis vector `X` is labelled `X*`.
  static DualBasisFrame from_algebra(const LieAlgebra& g);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string format(const ExteriorForm& f) const;

 private:
  std::vector<std::string> labels_;
};

/// Exterior product; sign from the number of transpositions needed to merge.
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

/// Interior product with x (first-slot insertion), an antiderivation of degree -1.
ExteriorForm contraction(const Vector& x, const ExteriorForm& a);
/// Interior product with the basis vector e_i.
ExteriorForm contraction(std::size_t i, const ExteriorForm& a);

/// Super Poisson bracket
///   {a, b} = (-1)^(k+1) sum_{i,j} B(Y_i, Y_j) i_{e_i}(a) ^ i_{e_j}(b)
/// for a of degree k, where B(Y_i, .) = w_i, so that B(Y_i, Y_j) is the
/// (i, j) entry of the inverse Gram matrix. Mixed-degree a is handled slice
/// by slice. Throws DegenerateForm if B is singular.
ExteriorForm super_poisson(const BilinearForm& form, const ExteriorForm& a, const ExteriorForm& b);

/// I(X, Y, Z) = B([X, Y], Z) as a 3-form. Throws FormNotInvariant.
ExteriorForm three_form(const LieAlgebra& g, const BilinearForm& form);

}  // namespace liecohom
