#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liecohom/linalg.hpp"

namespace liecohom {

/// One structure-constant record: [e_i, e_j] = sum over coeffs of c * e_k.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, Scalar>> coeffs;

  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// Only validated instances exist: construction goes through
/// build_lie_algebra, which canonicalizes antisymmetry and checks the
/// Jacobi identity on every basis triple.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] as a sparse coordinate vector (handles i >= j).
  const SparseVector& bracket_basis(std::size_t i, std::size_t j) const;

  /// Nonzero brackets with i < j, in lexicographic (i, j) order.
  std::vector<BracketEntry> bracket_table() const;

  /// Index of the basis vector with the given label; throws IndexOutOfRange.
  std::size_t index_of(const std::string& label) const;

  /// Unit coordinate vector e_i.
  Vector basis_vector(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

 private:
  friend LieAlgebra build_lie_algebra(std::size_t, std::vector<std::string>,
                                      const std::vector<BracketEntry>&);
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  // table_[i * dim_ + j] = [e_i, e_j]
  std::vector<SparseVector> table_;
};

/// Validates and builds an algebra. Entries with i > j are negated into
/// (j, i); repeated pairs must agree. Empty `labels` yields e0, e1, ...
/// Throws IndexOutOfRange, BadParameter (inconsistent or diagonal entries)
/// or JacobiViolation.
LieAlgebra build_lie_algebra(std::size_t dim, std::vector<std::string> labels,
                             const std::vector<BracketEntry>& brackets);

/// Bilinear extension of the structure constants.
Vector bracket(const LieAlgebra& g, const Vector& v, const Vector& w);

/// Matrix of ad(x): column m holds [x, e_m].
Matrix adjoint(const LieAlgebra& g, const Vector& x);
Matrix adjoint(const LieAlgebra& g, std::size_t i);

/// Span of all brackets [g, g].
Subspace derived_subalgebra(const LieAlgebra& g);

/// {x : [x, g] = 0}.
Subspace center(const LieAlgebra& g);

/// Quotient by the ideal spanned by the given basis vectors. The remaining
/// basis vectors keep their relative order; throws BadParameter when the
/// span is not an ideal.
LieAlgebra quotient_by_basis(const LieAlgebra& g, const std::vector<std::size_t>& dropped);

/// Re-expresses g in the basis f_t = e_{order[t]}, with new labels.
LieAlgebra reorder_basis(const LieAlgebra& g, const std::vector<std::size_t>& order,
                         std::vector<std::string> labels);

}  // namespace liecohom
