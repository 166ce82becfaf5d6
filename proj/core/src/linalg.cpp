#include "liecohom/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "liecohom/errors.hpp"

namespace liecohom {

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("Matrix::apply: vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!liecohom::is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& x) { return liecohom::is_zero(x); });
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, Vector data) {
  if (data.size() != rows * cols) throw DimensionMismatch("Matrix::from_flat: size mismatch");
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(data);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a(piv, col))) ++piv;
    if (piv == n) throw DegenerateForm("matrix is singular");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const Scalar scale = 1 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const Scalar f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!liecohom::is_zero(m(r, c))) s.rows_data_[r].emplace_back(c, m(r, c));
  return s;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_data_[r]) m(r, c) = v;
  return m;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows() || c >= cols_) throw IndexOutOfRange("SparseMatrix::add out of range");
  if (liecohom::is_zero(value)) return;
  auto& row = rows_data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (liecohom::is_zero(it->second)) row.erase(it);
  } else {
    row.emplace(it, c, value);
  }
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_data_) n += r.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_data_[r]) t.rows_data_[c].emplace_back(r, v);
  return t;
}

Vector SparseMatrix::column(std::size_t c) const {
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("sparse product shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& [k, aik] : a.row(i))
      for (const auto& [j, bkj] : b.row(k)) acc[j] += aik * bkj;
    for (auto& [j, v] : acc)
      if (!is_zero(v)) out.rows_data_[i].emplace_back(j, std::move(v));
  }
  return out;
}

// ------------------------------------------------------------------ rank

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (row.front().second < 0) g = -g;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseVector& row) {
  mpz_class l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, v.get_num() * (l / v.get_den()));
  make_primitive(out);
  return out;
}

// a * x - b * y, dropping zeros.
IntRow combine(const mpz_class& a, const IntRow& x, const mpz_class& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank_exact(const SparseMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (const auto& r : m.all_rows())
    if (!r.empty()) rows.push_back(to_integer_row(r));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });

  std::vector<std::optional<IntRow>> pivot_of(m.cols());
  std::size_t rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto& piv = pivot_of[lead];
      if (!piv) {
        piv = std::move(row);
        ++rank;
        break;
      }
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), piv->front().second.get_mpz_t(), row.front().second.get_mpz_t());
      const mpz_class a = piv->front().second / g;
      const mpz_class b = row.front().second / g;
      row = combine(a, row, b, *piv);
      make_primitive(row);
    }
  }
  return rank;
}

std::size_t rank_exact(const Matrix& m) { return rank_exact(SparseMatrix::from_dense(m)); }

// ------------------------------------------------------------------ RREF

namespace {

// x -= f * y
void axpy(SparseVector& x, const Scalar& f, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(std::move(x[i]));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -f * y[j].second);
      ++j;
    } else {
      Scalar v = x[i].second - f * y[j].second;
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  x = std::move(out);
}

Scalar lookup(const SparseVector& v, std::size_t c) {
  auto it = std::lower_bound(v.begin(), v.end(), c,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != v.end() && it->first == c) return it->second;
  return 0;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

Vector to_dense(const SparseVector& s, std::size_t n) {
  Vector v(n);
  for (const auto& [i, x] : s) v[i] = x;
  return v;
}

}  // namespace

std::vector<SparseVector> reduced_row_echelon(std::vector<SparseVector> rows,
                                              std::vector<std::size_t>& pivots) {
  std::stable_sort(rows.begin(), rows.end(), [](const SparseVector& a, const SparseVector& b) {
    return a.size() < b.size();
  });
  std::map<std::size_t, SparseVector> echelon;
  for (auto& row : rows) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = echelon.find(lead);
      if (it == echelon.end()) {
        const Scalar inv = 1 / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        echelon.emplace(lead, std::move(row));
        break;
      }
      const Scalar f = row.front().second;
      axpy(row, f, it->second);
    }
  }
  // Back substitution, largest pivot first, so every row referenced is final.
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    auto& row = it->second;
    for (auto later = echelon.upper_bound(it->first); later != echelon.end(); ++later) {
      const Scalar f = lookup(row, later->first);
      if (!is_zero(f)) axpy(row, f, later->second);
    }
  }
  pivots.clear();
  std::vector<SparseVector> out;
  out.reserve(echelon.size());
  for (auto& [p, row] : echelon) {
    pivots.push_back(p);
    out.push_back(std::move(row));
  }
  return out;
}

// -------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  std::vector<SparseVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("Subspace::span: vector length mismatch");
    rows.push_back(to_sparse(v));
  }
  Subspace s(ambient);
  auto reduced = reduced_row_echelon(std::move(rows), s.pivots_);
  for (const auto& r : reduced) s.basis_.push_back(to_dense(r, ambient));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains: vector length mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar f = r[pivots_[i]];
    if (is_zero(f)) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!is_zero(basis_[i][c])) r[c] -= f * basis_[i][c];
  }
  return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return is_zero(x); });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error("Subspace::coordinates: vector not in subspace");
  Vector out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("subspace sum: ambient mismatch");
  std::vector<Vector> all = a.basis_;
  all.insert(all.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_, all);
}

Subspace kernel_basis(const SparseMatrix& m) {
  std::vector<std::size_t> pivots;
  auto reduced = reduced_row_echelon(m.all_rows(), pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < reduced.size(); ++i) v[pivots[i]] = -lookup(reduced[i], f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace kernel_basis(const Matrix& m) { return kernel_basis(SparseMatrix::from_dense(m)); }

Subspace image_basis(const SparseMatrix& m) {
  std::vector<Vector> cols;
  const auto t = m.transpose();
  for (std::size_t c = 0; c < t.rows(); ++c)
    if (!t.row(c).empty()) cols.push_back(to_dense(t.row(c), m.rows()));
  return Subspace::span(m.rows(), cols);
}

}  // namespace liecohom
