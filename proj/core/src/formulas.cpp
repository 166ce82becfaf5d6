#include "liecohom/formulas.hpp"

#include <cstdlib>
#include <unordered_map>
#include <vector>

#include "liecohom/errors.hpp"
#include "liecohom/exterior.hpp"

namespace liecohom {
namespace {

std::int64_t sq(std::int64_t x) { return x * x; }

void require(bool ok, const std::string& what) {
  if (!ok) throw BadParameter(what);
}

// K(1, j, j, n) extended by zero outside 0 <= j <= n.
std::int64_t diagonal_kernel(std::int64_t j, std::int64_t n) {
  if (j < 0 || j > n) return 0;
  return kernel_closed_m1(j, n);
}

std::int64_t mixed_sum(std::int64_t n, std::int64_t k) {
  std::int64_t s = 0;
  for (std::int64_t i = 0; i <= k - 1; ++i) s += binomial(n, i) * binomial(n + 1, k - 1 - i);
  return s;
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t betti_f_closed(std::int64_t n, std::int64_t k) {
  require(n >= 1, "betti_f_closed: n must be >= 1");
  require(k >= 0 && k <= 2 * n + 1, "betti_f_closed: degree out of range");
  return static_cast<std::uint64_t>(sq(binomial(n, k / 2)));
}

std::int64_t pouseele_lift(std::span<const std::uint64_t> betti_f, std::int64_t n, std::int64_t k) {
  require(n >= 1, "pouseele_lift: n must be >= 1");
  require(betti_f.size() == static_cast<std::size_t>(2 * n + 2),
          "pouseele_lift: Betti table of f must cover degrees 0..2n+1");
  require(k >= 0 && k <= 2 * n + 2, "pouseele_lift: degree out of range");
  auto b = [&](std::int64_t j) { return static_cast<std::int64_t>(betti_f[static_cast<std::size_t>(j)]); };
  if (k <= 1) return b(k);
  if (k <= n) return b(k) - b(k - 2);
  if (k == n + 1) return 2 * (b(n + 1) - b(n - 1));
  if (k <= 2 * n) return b(k - 1) - b(k + 1);
  return b(k - 1);
}

std::int64_t betti_g2n2_closed(std::int64_t n, std::int64_t k) {
  require(n >= 1, "betti_g2n2_closed: n must be >= 1");
  require(k >= 0 && k <= 2 * n + 2, "betti_g2n2_closed: degree out of range");
  if (k % 2 == 0) return std::llabs(sq(binomial(n, k / 2)) - sq(binomial(n, (k - 2) / 2)));
  if (k < n + 1) return sq(binomial(n, (k - 1) / 2)) - sq(binomial(n, (k - 3) / 2));
  if (k == n + 1) return 2 * sq(binomial(n, n / 2)) - 2 * sq(binomial(n, (n + 2) / 2));
  return sq(binomial(n, (k - 1) / 2)) - sq(binomial(n, (k + 1) / 2));
}

std::int64_t betti_g2n2_from_kernels(std::int64_t n, std::int64_t k) {
  require(n >= 1, "betti_g2n2_from_kernels: n must be >= 1");
  require(k >= 0 && k <= 2 * n + 2, "betti_g2n2_from_kernels: degree out of range");
  if (k % 2 == 0) {
    const std::int64_t j = (k - 2) / 2;
    return sq(binomial(n, k / 2)) + 2 * diagonal_kernel(j, n) - sq(binomial(n, j));
  }
  const std::int64_t j = (k - 1) / 2;
  return sq(binomial(n, j)) + diagonal_kernel(j, n) + diagonal_kernel(j - 1, n) -
         sq(binomial(n, j - 1));
}

std::int64_t kerdim_partial(std::int64_t n, std::int64_t k) {
  require(n >= 1, "kerdim_partial: n must be >= 1");
  require(k >= 0 && k <= 2 * n + 2, "kerdim_partial: degree out of range");
  if (k % 2 == 0) {
    const std::int64_t j = (k - 2) / 2;
    return sq(binomial(n, k / 2)) + mixed_sum(n, k) + diagonal_kernel(j, n) - sq(binomial(n, j));
  }
  return diagonal_kernel((k - 1) / 2, n) + mixed_sum(n, k);
}

std::uint64_t phi_kernel_oracle(std::int64_t m, std::int64_t k1, std::int64_t k2, std::int64_t n) {
  require(m >= 0, "phi_kernel_oracle: m must be >= 0");
  require(n >= 0 && 2 * static_cast<std::size_t>(n) <= kMaxExteriorDim, "phi_kernel_oracle: bad n");
  require(k1 >= 0 && k1 <= n && k2 >= 0 && k2 <= n, "phi_kernel_oracle: k1, k2 must lie in 0..n");
  const auto un = static_cast<std::size_t>(n);
  const std::size_t dim = 2 * un;

  // a_i at index i - 1, b_i at index n + i - 1.
  ExteriorForm omega(dim);
  for (std::size_t i = 0; i < un; ++i) omega.add_term((Monomial{1} << i) | (Monomial{1} << (un + i)), 1);
  ExteriorForm power = ExteriorForm::scalar(dim, 1);
  for (std::int64_t t = 0; t < m; ++t) power = wedge(power, omega);

  std::vector<Monomial> domain;
  for (auto a : monomial_basis(un, static_cast<std::size_t>(k1)))
    for (auto b : monomial_basis(un, static_cast<std::size_t>(k2))) domain.push_back(a | (b << un));

  std::unordered_map<Monomial, std::size_t> target_index;
  const std::int64_t t1 = k1 + m, t2 = k2 + m;
  if (t1 <= n && t2 <= n) {
    for (auto a : monomial_basis(un, static_cast<std::size_t>(t1)))
      for (auto b : monomial_basis(un, static_cast<std::size_t>(t2)))
        target_index.emplace(a | (b << un), target_index.size());
  }
  SparseMatrix mat(target_index.size(), domain.size());
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const ExteriorForm image = wedge(power, ExteriorForm::from_mask(dim, domain[col]));
    for (const auto& [mono, c] : image.terms()) mat.add(target_index.at(mono), col, c);
  }
  return domain.size() - rank_exact(mat);
}

std::int64_t KernelRecursion::operator()(const KernelQuery& q) {
  const auto [m, k1, k2, n] = q;
  if (m < 0) return -(*this)({-m, k1 + m, k2 + m, n});
  if (k1 < 0 || k2 < 0) return 0;
  if (m == 0) return 0;
  if (k1 == 0 && k2 == 0) return m > n ? 1 : 0;
  if (n >= 1 && k1 + k2 == 1) return n > m ? 0 : n;
  if (n <= 0) return 0;

  if (auto it = memo_.find(q); it != memo_.end()) return it->second;
  const std::int64_t value = (*this)({m + 1, k1 - 1, k2 - 1, n - 1}) +
                             (*this)({m, k1 - 1, k2, n - 1}) +
                             (*this)({m, k1, k2 - 1, n - 1}) +
                             (*this)({m - 1, k1, k2, n - 1});
  memo_.emplace(q, value);
  return value;
}

std::int64_t kernel_recursive(const KernelQuery& q) {
  KernelRecursion k;
  return k(q);
}

std::int64_t kernel_diagonal_expansion(std::int64_t m, std::int64_t k, std::int64_t n) {
  require(n >= 0, "kernel_diagonal_expansion: n must be >= 0");
  KernelRecursion kr;
  std::int64_t total = 0;
  for (std::int64_t p = 0; p <= n; ++p)
    for (std::int64_t q = 0; q <= n; ++q)
      total += binomial(n, p) * binomial(n, q) * kr({m + n - p - q, k - n + p, k - n + q, 0});
  return total;
}

std::int64_t kernel_closed_m1(std::int64_t k, std::int64_t n) {
  require(n >= 0 && k >= 0 && k <= n, "kernel_closed_m1: need 0 <= k <= n");
  if (2 * k < n) return 0;
  return sq(binomial(n, k)) - sq(binomial(n, k + 1));
}

std::int64_t h2_g4n2_closed(std::int64_t n) {
  require(n >= 1, "h2_g4n2_closed: n must be >= 1");
  return n == 1 ? 8 : 5 * n * n + n;
}

BettiTable formula_betti_table_g2n2(std::int64_t n, BettiMethod method) {
  require(n >= 1, "formula table: n must be >= 1");
  BettiTable t;
  t.method = method;
  t.label = "g2n2(n=" + std::to_string(n) + ")";
  std::vector<std::uint64_t> f;
  if (method == BettiMethod::extension_lift)
    for (std::int64_t k = 0; k <= 2 * n + 1; ++k) f.push_back(betti_f_closed(n, k));
  for (std::int64_t k = 0; k <= 2 * n + 2; ++k) {
    std::int64_t v = 0;
    switch (method) {
      case BettiMethod::closed_form: v = betti_g2n2_closed(n, k); break;
      case BettiMethod::kernel_count: v = betti_g2n2_from_kernels(n, k); break;
      case BettiMethod::extension_lift: v = pouseele_lift(f, n, k); break;
      default: throw BadParameter("method " + method_name(method) + " is not a formula method");
    }
    require(v >= 0, "formula produced a negative Betti number in degree " + std::to_string(k));
    t.values.push_back(static_cast<std::uint64_t>(v));
  }
  return t;
}

}  // namespace liecohom
