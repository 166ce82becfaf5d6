#include "liecohom/cohomology.hpp"

#include <algorithm>

#include "liecohom/errors.hpp"

namespace liecohom {

SparseMatrix standard_ce_matrix(const LieAlgebra& g, std::size_t k) {
  const std::size_t n = g.dim();
  const auto targets = monomial_basis(n, k + 1);
  SparseMatrix d(targets.size(), monomial_basis(n, k).size());
  std::vector<std::size_t> slots;
  for (std::size_t row = 0; row < targets.size(); ++row) {
    const Monomial s = targets[row];
    slots.clear();
    for (Monomial r = s; r; r &= r - 1) slots.push_back(static_cast<std::size_t>(__builtin_ctzll(r)));
    for (std::size_t p = 0; p < slots.size(); ++p)
      for (std::size_t q = p + 1; q < slots.size(); ++q) {
        const auto& br = g.bracket_basis(slots[p], slots[q]);
        if (br.empty()) continue;
        const Monomial rest = s & ~(Monomial{1} << slots[p]) & ~(Monomial{1} << slots[q]);
        for (const auto& [l, c] : br) {
          const Monomial bit = Monomial{1} << l;
          if (rest & bit) continue;
          const bool odd = ((p + q) + __builtin_popcountll(rest & (bit - 1))) % 2 == 1;
          d.add(row, monomial_index(rest | bit), odd ? Scalar(-c) : c);
        }
      }
  }
  return d;
}

SparseMatrix quadratic_matrix(const BilinearForm& form, const ExteriorForm& three, std::size_t k) {
  const std::size_t n = three.dim();
  const auto sources = monomial_basis(n, k);
  SparseMatrix d(monomial_basis(n, k + 1).size(), sources.size());
  for (std::size_t col = 0; col < sources.size(); ++col) {
    const ExteriorForm image = super_poisson(form, three, ExteriorForm::from_mask(n, sources[col]));
    for (const auto& [m, c] : image.terms()) d.add(monomial_index(m), col, -c);
  }
  return d;
}

namespace {

void require_square_zero(const CochainComplex& c) {
  if (!squares_to_zero(c)) throw Error("differential does not square to zero");
}

}  // namespace

CochainComplex standard_ce_differential(const LieAlgebra& g, std::size_t max_degree) {
  CochainComplex c;
  c.dimension = g.dim();
  c.kind = DifferentialKind::standard;
  const std::size_t top = std::min(g.dim(), max_degree);
  for (std::size_t k = 0; k <= top; ++k) c.differentials.push_back(standard_ce_matrix(g, k));
  require_square_zero(c);
  return c;
}

CochainComplex quadratic_differential(const LieAlgebra& g, const BilinearForm& form,
                                      std::size_t max_degree) {
  require_quadratic(g, form);
  const ExteriorForm three = three_form(g, form);
  CochainComplex c;
  c.dimension = g.dim();
  c.kind = DifferentialKind::quadratic;
  const std::size_t top = std::min(g.dim(), max_degree);
  for (std::size_t k = 0; k <= top; ++k) c.differentials.push_back(quadratic_matrix(form, three, k));
  require_square_zero(c);
  return c;
}

bool squares_to_zero(const CochainComplex& complex) {
  for (std::size_t k = 0; k + 1 < complex.differentials.size(); ++k)
    if (!(complex.differentials[k + 1] * complex.differentials[k]).is_zero()) return false;
  return true;
}

ExteriorForm apply_quadratic_differential(const LieAlgebra& g, const BilinearForm& form,
                                          const ExteriorForm& w) {
  return -super_poisson(form, three_form(g, form), w);
}

std::vector<DegreeData> analyze(const CochainComplex& complex) {
  std::vector<DegreeData> out;
  std::uint64_t previous_rank = 0;
  for (std::size_t k = 0; k < complex.differentials.size(); ++k) {
    const auto& d = complex.differentials[k];
    DegreeData row;
    row.k = k;
    row.cochains = d.cols();
    row.rank = rank_exact(d);
    row.kernel = row.cochains - row.rank;
    row.betti = row.kernel - previous_rank;
    previous_rank = row.rank;
    out.push_back(row);
  }
  return out;
}

std::string method_name(BettiMethod m) {
  switch (m) {
    case BettiMethod::bruteforce: return "bruteforce";
    case BettiMethod::quadratic: return "quadratic";
    case BettiMethod::closed_form: return "theorem2";
    case BettiMethod::kernel_count: return "cor25";
    case BettiMethod::extension_lift: return "pouseele";
  }
  return "unknown";
}

BettiMethod parse_method(const std::string& name) {
  for (auto m : {BettiMethod::bruteforce, BettiMethod::quadratic, BettiMethod::closed_form,
                 BettiMethod::kernel_count, BettiMethod::extension_lift})
    if (method_name(m) == name) return m;
  throw BadParameter("unknown method '" + name + "'");
}

std::int64_t BettiTable::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < values.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(values[k]);
  return chi;
}

bool BettiTable::is_palindromic() const {
  return std::equal(values.begin(), values.end(), values.rbegin());
}

namespace {

BettiTable table_from(const std::vector<DegreeData>& data, BettiMethod method) {
  BettiTable t;
  t.method = method;
  for (const auto& d : data) t.values.push_back(d.betti);
  return t;
}

}  // namespace

BettiTable betti_numbers(const LieAlgebra& g, std::size_t max_degree) {
  return table_from(analyze(standard_ce_differential(g, max_degree)), BettiMethod::bruteforce);
}

BettiTable betti_numbers(const LieAlgebra& g, const BilinearForm& form, std::size_t max_degree) {
  const auto quadratic = analyze(quadratic_differential(g, form, max_degree));
  const auto standard = analyze(standard_ce_differential(g, max_degree));
  for (std::size_t k = 0; k < quadratic.size(); ++k)
    if (quadratic[k].rank != standard[k].rank)
      throw Error("quadratic and standard differentials disagree in degree " + std::to_string(k));
  return table_from(quadratic, BettiMethod::quadratic);
}

Degree2Spaces degree2_spaces(const LieAlgebra& g, const BilinearForm& form) {
  require_quadratic(g, form);
  if (g.dim() < 2) throw BadParameter("degree2_spaces needs dimension >= 2");
  const ExteriorForm three = three_form(g, form);
  Degree2Spaces out;
  out.cocycles = kernel_basis(quadratic_matrix(form, three, 2));
  out.coboundaries = image_basis(quadratic_matrix(form, three, 1));
  out.h2 = out.cocycles.dim() - out.coboundaries.dim();
  return out;
}

}  // namespace liecohom
