#include "liecohom/exterior.hpp"

#include <algorithm>
#include <array>

#include "liecohom/errors.hpp"
#include "liecohom/forms.hpp"

namespace liecohom {
namespace {

// Binomial table for the combinatorial number system, n, k <= 64.
const std::array<std::array<std::uint64_t, 65>, 65>& binomials() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (std::size_t n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

// +1 or -1: parity of pairs (i in a, j in b) with i > j.
int merge_sign(Monomial a, Monomial b) {
  std::size_t inversions = 0;
  while (b) {
    const int j = __builtin_ctzll(b);
    b &= b - 1;
    const Monomial above = j >= 63 ? 0 : (a >> (j + 1));
    inversions += static_cast<std::size_t>(__builtin_popcountll(above));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

void check_dim(std::size_t dim) {
  if (dim > kMaxExteriorDim)
    throw BadParameter("exterior algebra dimension exceeds " + std::to_string(kMaxExteriorDim));
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, std::size_t k) {
  check_dim(n);
  std::vector<Monomial> out;
  if (k > n) return out;
  if (k == 0) return {0};
  out.reserve(binomials()[n][k]);
  Monomial m = (Monomial{1} << k) - 1;
  const Monomial limit = Monomial{1} << n;
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack: next larger integer with the same popcount.
    const Monomial c = m & (~m + 1);
    const Monomial r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::size_t monomial_index(Monomial m) {
  std::size_t index = 0;
  std::size_t t = 1;
  while (m) {
    const int s = __builtin_ctzll(m);
    m &= m - 1;
    index += binomials()[static_cast<std::size_t>(s)][t];
    ++t;
  }
  return index;
}

// ------------------------------------------------------------ ExteriorForm

ExteriorForm::ExteriorForm(std::size_t dim) : dim_(dim) { check_dim(dim); }

ExteriorForm ExteriorForm::scalar(std::size_t dim, const Scalar& c) {
  ExteriorForm f(dim);
  f.add_term(0, c);
  return f;
}

ExteriorForm ExteriorForm::covector(std::size_t dim, std::size_t i) {
  if (i >= dim) throw IndexOutOfRange("covector index out of range");
  return from_mask(dim, Monomial{1} << i);
}

ExteriorForm ExteriorForm::monomial(std::size_t dim, std::initializer_list<std::size_t> indices) {
  return monomial(dim, std::vector<std::size_t>(indices));
}

ExteriorForm ExteriorForm::monomial(std::size_t dim, const std::vector<std::size_t>& indices) {
  ExteriorForm f = scalar(dim, 1);
  for (auto i : indices) f = wedge(f, covector(dim, i));
  return f;
}

ExteriorForm ExteriorForm::from_mask(std::size_t dim, Monomial m, const Scalar& c) {
  ExteriorForm f(dim);
  if (dim < 64 && (m >> dim) != 0) throw IndexOutOfRange("monomial uses indices beyond dimension");
  f.add_term(m, c);
  return f;
}

ExteriorForm ExteriorForm::from_coordinates(std::size_t dim, std::size_t k, const Vector& coords) {
  const auto basis = monomial_basis(dim, k);
  if (coords.size() != basis.size()) throw DimensionMismatch("from_coordinates: length mismatch");
  ExteriorForm f(dim);
  for (std::size_t t = 0; t < basis.size(); ++t) f.add_term(basis[t], coords[t]);
  return f;
}

Scalar ExteriorForm::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void ExteriorForm::add_term(Monomial m, const Scalar& c) {
  if (liecohom::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (liecohom::is_zero(it->second)) terms_.erase(it);
  }
}

ExteriorForm ExteriorForm::slice(std::size_t k) const {
  ExteriorForm f(dim_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m) == k) f.terms_.emplace_hint(f.terms_.end(), m, c);
  return f;
}

std::vector<std::size_t> ExteriorForm::degrees() const {
  std::vector<std::size_t> out;
  for (const auto& [m, c] : terms_) out.push_back(degree_of(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ExteriorForm::is_homogeneous() const { return degrees().size() <= 1; }

std::size_t ExteriorForm::degree() const {
  const auto ds = degrees();
  if (ds.size() != 1) throw BadParameter("degree() requires a nonzero homogeneous form");
  return ds.front();
}

Vector ExteriorForm::coordinates(std::size_t k) const {
  const auto basis = monomial_basis(dim_, k);
  Vector v(basis.size());
  for (const auto& [m, c] : terms_)
    if (degree_of(m) == k) v[monomial_index(m)] = c;
  return v;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("ExteriorForm sum: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("ExteriorForm difference: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExteriorForm& ExteriorForm::operator*=(const Scalar& s) {
  if (liecohom::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------- DualBasisFrame

DualBasisFrame DualBasisFrame::from_algebra(const LieAlgebra& g) {
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(l + "*");
  return DualBasisFrame(std::move(labels));
}

std::string DualBasisFrame::format(const ExteriorForm& f) const {
  if (f.dim() != labels_.size()) throw DimensionMismatch("frame size does not match form");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string coeff = to_string(c);
    if (first) {
      if (coeff == "-1" && m != 0) coeff = "-";
      else if (coeff == "1" && m != 0) coeff = "";
    } else {
      if (sgn(c) < 0) {
        out += " - ";
        coeff = to_string(Scalar(-c));
      } else {
        out += " + ";
      }
      if (coeff == "1" && m != 0) coeff = "";
    }
    first = false;
    std::string mono;
    for (Monomial r = m; r; r &= r - 1) {
      if (!mono.empty()) mono += "^";
      mono += labels_[static_cast<std::size_t>(__builtin_ctzll(r))];
    }
    if (m == 0) out += coeff;
    else out += coeff.empty() || coeff == "-" ? coeff + mono : coeff + "*" + mono;
  }
  return out;
}

// -------------------------------------------------------------- operations

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge: dimension mismatch");
  ExteriorForm out(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  return out;
}

ExteriorForm contraction(const Vector& x, const ExteriorForm& a) {
  if (x.size() != a.dim()) throw DimensionMismatch("contraction: vector length mismatch");
  ExteriorForm out(a.dim());
  for (const auto& [m, c] : a.terms()) {
    for (Monomial r = m; r; r &= r - 1) {
      const int t = __builtin_ctzll(r);
      const Scalar& xt = x[static_cast<std::size_t>(t)];
      if (is_zero(xt)) continue;
      const Monomial below = m & ((Monomial{1} << t) - 1);
      Scalar v = c * xt;
      if (__builtin_popcountll(below) % 2 == 1) v = -v;
      out.add_term(m & ~(Monomial{1} << t), v);
    }
  }
  return out;
}

ExteriorForm contraction(std::size_t i, const ExteriorForm& a) {
  if (i >= a.dim()) throw IndexOutOfRange("contraction index out of range");
  ExteriorForm out(a.dim());
  const Monomial bit = Monomial{1} << i;
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    const bool odd = __builtin_popcountll(m & (bit - 1)) % 2 == 1;
    out.add_term(m & ~bit, odd ? Scalar(-c) : c);
  }
  return out;
}

ExteriorForm super_poisson(const BilinearForm& form, const ExteriorForm& a, const ExteriorForm& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n || form.dim() != n) throw DimensionMismatch("super_poisson: dimension mismatch");
  const Matrix& ginv = form.inverse_gram();

  std::vector<ExteriorForm> right;
  right.reserve(n);
  for (std::size_t j = 0; j < n; ++j) right.push_back(contraction(j, b));

  ExteriorForm out(n);
  for (auto k : a.degrees()) {
    const ExteriorForm ak = a.slice(k);
    ExteriorForm acc(n);
    for (std::size_t i = 0; i < n; ++i) {
      const ExteriorForm left = contraction(i, ak);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& gij = ginv(i, j);
        if (is_zero(gij) || right[j].is_zero()) continue;
        ExteriorForm term = wedge(left, right[j]);
        term *= gij;
        acc += term;
      }
    }
    if (k % 2 == 0) acc *= Scalar(-1);  // (-1)^(k+1)
    out += acc;
  }
  return out;
}

ExteriorForm three_form(const LieAlgebra& g, const BilinearForm& form) {
  if (!is_invariant_form(g, form))
    throw FormNotInvariant("three_form: bilinear form is not invariant");
  const std::size_t n = g.dim();
  const Matrix& gram = form.gram();
  ExteriorForm out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& ab = g.bracket_basis(a, b);
      if (ab.empty()) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        Scalar v = 0;
        for (const auto& [l, x] : ab) v += x * gram(l, c);
        out.add_term((Monomial{1} << a) | (Monomial{1} << b) | (Monomial{1} << c), v);
      }
    }
  return out;
}

}  // namespace liecohom
