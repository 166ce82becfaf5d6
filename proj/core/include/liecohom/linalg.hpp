#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "liecohom/rational.hpp"

namespace liecohom {

using Vector = std::vector<Scalar>;

/// Sorted (index, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  /// Row-major flattening, entry (r, c) at r * cols + c.
  const Vector& flat() const { return data_; }
  static Matrix from_flat(std::size_t rows, std::size_t cols, Vector data);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact inverse by Gauss-Jordan elimination; throws DegenerateForm when singular.
Matrix inverse(const Matrix& m);

/// Row-major sparse rational matrix; each row is a SparseVector.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_data_(rows) {}

  static SparseMatrix from_dense(const Matrix& m);
  Matrix to_dense() const;

  std::size_t rows() const { return rows_data_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds `value` to entry (r, c), pruning exact zeros.
  void add(std::size_t r, std::size_t c, const Scalar& value);
  Scalar at(std::size_t r, std::size_t c) const;

  const SparseVector& row(std::size_t r) const { return rows_data_[r]; }
  std::vector<SparseVector>& mutable_rows() { return rows_data_; }
  const std::vector<SparseVector>& all_rows() const { return rows_data_; }

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  SparseMatrix transpose() const;

  /// Column c as a dense vector.
  Vector column(std::size_t c) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_data_;
};

/// Exact rank over Q. Rows are scaled to primitive integer vectors and
/// eliminated fraction-free (cross-multiplication followed by content
/// removal), taking sparsest rows first as pivots.
std::size_t rank_exact(const SparseMatrix& m);
std::size_t rank_exact(const Matrix& m);

/// Row space of a set of vectors held in reduced row-echelon form, pivots
/// in increasing column order. Two subspaces are equal iff their bases are.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  /// Echelon basis of span(vectors).
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0} in echelon form.
Subspace kernel_basis(const SparseMatrix& m);
Subspace kernel_basis(const Matrix& m);

/// Column space of m.
Subspace image_basis(const SparseMatrix& m);

/// Reduced row-echelon form of the given rows (zero rows dropped); the
/// pivot column of each returned row is written to `pivots`.
std::vector<SparseVector> reduced_row_echelon(std::vector<SparseVector> rows,
                                              std::vector<std::size_t>& pivots);

}  // namespace liecohom
