#include "liecohom/lie_algebra.hpp"

#include <algorithm>
#include <map>

#include "liecohom/errors.hpp"

namespace liecohom {
namespace {

SparseVector sorted_sparse(const std::vector<std::pair<std::size_t, Scalar>>& coeffs,
                           std::size_t dim) {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [k, c] : coeffs) {
    if (k >= dim) throw IndexOutOfRange("bracket coefficient index " + std::to_string(k) +
                                        " out of range for dimension " + std::to_string(dim));
    acc[k] += c;
  }
  SparseVector out;
  for (auto& [k, c] : acc)
    if (!is_zero(c)) out.emplace_back(k, c);
  return out;
}

SparseVector negate(SparseVector v) {
  for (auto& [k, c] : v) c = -c;
  return v;
}

void accumulate(Vector& acc, const Scalar& f, const SparseVector& v) {
  for (const auto& [k, c] : v) acc[k] += f * c;
}

}  // namespace

const SparseVector& LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw IndexOutOfRange("bracket_basis index out of range");
  return table_[i * dim_ + j];
}

std::vector<BracketEntry> LieAlgebra::bracket_table() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& v = table_[i * dim_ + j];
      if (v.empty()) continue;
      out.push_back({i, j, {v.begin(), v.end()}});
    }
  return out;
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw IndexOutOfRange("no basis vector labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Vector LieAlgebra::basis_vector(std::size_t i) const {
  if (i >= dim_) throw IndexOutOfRange("basis_vector index out of range");
  Vector v(dim_);
  v[i] = 1;
  return v;
}

LieAlgebra build_lie_algebra(std::size_t dim, std::vector<std::string> labels,
                             const std::vector<BracketEntry>& brackets) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != dim) throw BadParameter("label count does not match dimension");

  LieAlgebra g;
  g.dim_ = dim;
  g.labels_ = std::move(labels);
  g.table_.assign(dim * dim, {});
  std::vector<bool> seen(dim * dim, false);

  for (const auto& entry : brackets) {
    if (entry.i >= dim || entry.j >= dim)
      throw IndexOutOfRange("bracket pair (" + std::to_string(entry.i) + "," +
                            std::to_string(entry.j) + ") out of range");
    SparseVector v = sorted_sparse(entry.coeffs, dim);
    if (entry.i == entry.j) {
      if (!v.empty()) throw BadParameter("nonzero self-bracket [e_i, e_i]");
      continue;
    }
    std::size_t i = entry.i, j = entry.j;
    if (i > j) {
      std::swap(i, j);
      v = negate(std::move(v));
    }
    const std::size_t slot = i * dim + j;
    if (seen[slot] && g.table_[slot] != v)
      throw BadParameter("conflicting entries for bracket (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    seen[slot] = true;
    g.table_[j * dim + i] = negate(v);
    g.table_[slot] = std::move(v);
  }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vector sum(dim);
        for (const auto& [l, c] : g.bracket_basis(j, k)) accumulate(sum, c, g.bracket_basis(i, l));
        for (const auto& [l, c] : g.bracket_basis(k, i)) accumulate(sum, c, g.bracket_basis(j, l));
        for (const auto& [l, c] : g.bracket_basis(i, j)) accumulate(sum, c, g.bracket_basis(k, l));
        if (std::any_of(sum.begin(), sum.end(), [](const Scalar& x) { return !is_zero(x); })) {
          std::vector<std::string> residual;
          std::string text;
          for (std::size_t l = 0; l < dim; ++l) {
            residual.push_back(to_string(sum[l]));
            if (!is_zero(sum[l])) text += " " + to_string(sum[l]) + "*" + g.labels_[l];
          }
          throw JacobiViolation(i, j, k, std::move(residual),
                                "Jacobi identity fails on (" + g.labels_[i] + "," + g.labels_[j] +
                                    "," + g.labels_[k] + "): residual" + text);
        }
      }
  return g;
}

Vector bracket(const LieAlgebra& g, const Vector& v, const Vector& w) {
  if (v.size() != g.dim() || w.size() != g.dim())
    throw DimensionMismatch("bracket: vector length does not match algebra dimension");
  Vector out(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (is_zero(v[a])) continue;
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (is_zero(w[b])) continue;
      accumulate(out, v[a] * w[b], g.bracket_basis(a, b));
    }
  }
  return out;
}

Matrix adjoint(const LieAlgebra& g, const Vector& x) {
  if (x.size() != g.dim()) throw DimensionMismatch("adjoint: vector length mismatch");
  Matrix m(g.dim(), g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (is_zero(x[a])) continue;
    for (std::size_t col = 0; col < g.dim(); ++col)
      for (const auto& [row, c] : g.bracket_basis(a, col)) m(row, col) += x[a] * c;
  }
  return m;
}

Matrix adjoint(const LieAlgebra& g, std::size_t i) { return adjoint(g, g.basis_vector(i)); }

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<Vector> images;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto& v = g.bracket_basis(i, j);
      if (v.empty()) continue;
      Vector d(g.dim());
      for (const auto& [k, c] : v) d[k] = c;
      images.push_back(std::move(d));
    }
  return Subspace::span(g.dim(), images);
}

Subspace center(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  // Row (j, l): sum_i x_i c^l_{ij} = 0.
  SparseMatrix m(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [l, c] : g.bracket_basis(i, j)) m.add(j * d + l, i, c);
  return kernel_basis(m);
}

LieAlgebra quotient_by_basis(const LieAlgebra& g, const std::vector<std::size_t>& dropped) {
  std::vector<bool> gone(g.dim(), false);
  for (auto k : dropped) {
    if (k >= g.dim()) throw IndexOutOfRange("quotient_by_basis index out of range");
    gone[k] = true;
  }
  // Ideal check: [e_k, e_a] must stay inside the dropped span.
  for (auto k : dropped)
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (const auto& [l, c] : g.bracket_basis(k, a))
        if (!gone[l]) throw BadParameter("dropped basis vectors do not span an ideal");

  std::vector<std::size_t> new_index(g.dim(), 0);
  std::vector<std::string> labels;
  for (std::size_t a = 0, t = 0; a < g.dim(); ++a)
    if (!gone[a]) {
      new_index[a] = t++;
      labels.push_back(g.labels()[a]);
    }
  std::vector<BracketEntry> entries;
  for (const auto& e : g.bracket_table()) {
    if (gone[e.i] || gone[e.j]) continue;
    BracketEntry q{new_index[e.i], new_index[e.j], {}};
    for (const auto& [l, c] : e.coeffs)
      if (!gone[l]) q.coeffs.emplace_back(new_index[l], c);
    entries.push_back(std::move(q));
  }
  const std::size_t dim = labels.size();
  return build_lie_algebra(dim, std::move(labels), entries);
}

LieAlgebra reorder_basis(const LieAlgebra& g, const std::vector<std::size_t>& order,
                         std::vector<std::string> labels) {
  if (order.size() != g.dim()) throw BadParameter("reorder_basis: permutation size mismatch");
  std::vector<std::size_t> position(g.dim(), g.dim());
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (order[t] >= g.dim() || position[order[t]] != g.dim())
      throw BadParameter("reorder_basis: not a permutation");
    position[order[t]] = t;
  }
  std::vector<BracketEntry> entries;
  for (const auto& e : g.bracket_table()) {
    BracketEntry r{position[e.i], position[e.j], {}};
    for (const auto& [l, c] : e.coeffs) r.coeffs.emplace_back(position[l], c);
    entries.push_back(std::move(r));
  }
  return build_lie_algebra(g.dim(), std::move(labels), entries);
}

}  // namespace liecohom
