#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <tuple>

#include "liecohom/cohomology.hpp"

namespace liecohom {

/// C(n, k), zero for k < 0, k > n or n < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Betti numbers of f(n): C(n, floor(k/2))^2 for 0 <= k <= 2n + 1.
std::uint64_t betti_f_closed(std::int64_t n, std::int64_t k);

/// Betti number of g2n2(n) in degree k, lifted from the Betti table of f(n)
/// (degrees 0..2n+1) through the central-extension rule for a
/// one-dimensional algebra acting on a Heisenberg ideal.
std::int64_t pouseele_lift(std::span<const std::uint64_t> betti_f, std::int64_t n, std::int64_t k);

/// Closed form for b_k(g2n2(n)): squared binomials at k/2 by parity, with
/// the doubled middle term at k = n + 1.
std::int64_t betti_g2n2_closed(std::int64_t n, std::int64_t k);

/// b_k(g2n2(n)) from cocycle counts and the kernel dimensions of
/// w -> Omega_n ^ w on the diagonal blocks.
std::int64_t betti_g2n2_from_kernels(std::int64_t n, std::int64_t k);

/// dim ker of the degree-k differential of g2n2(n), from binomial sums and
/// the m = 1 kernel closed form.
std::int64_t kerdim_partial(std::int64_t n, std::int64_t k);

/// Kernel dimension of w -> Omega_n^m ^ w from
/// Lambda^k1(a_1..a_n) (x) Lambda^k2(b_1..b_n), computed by building the
/// matrix and taking its exact rank. Ground truth for the recursion below.
std::uint64_t phi_kernel_oracle(std::int64_t m, std::int64_t k1, std::int64_t k2, std::int64_t n);

struct KernelQuery {
  std::int64_t m = 0;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const KernelQuery&, const KernelQuery&) = default;
};

/// Memoized evaluation of the kernel recursion
///   K(m,k1,k2,n) = K(m+1,k1-1,k2-1,n-1) + K(m,k1-1,k2,n-1)
///                + K(m,k1,k2-1,n-1) + K(m-1,k1,k2,n-1)
/// closed off by the boundary values. Negative m is first reflected through
/// K(-m,k1,k2,n) = -K(m,k1-m,k2-m,n); then negative k1 or k2 give 0,
/// K(0,.,.,.) = 0, K(m,0,0,n) = [m > n], K(m,0,1,n) = K(m,1,0,n) =
/// (n <= m ? n : 0) for n >= 1, and K(m,k1,k2,0) = [m >= 1, k1 = k2 = 0].
/// Not thread-safe; use one instance per thread.
class KernelRecursion {
 public:
  std::int64_t operator()(const KernelQuery& q);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<KernelQuery, std::int64_t> memo_;
};

/// One-shot evaluation with a fresh memo table.
std::int64_t kernel_recursive(const KernelQuery& q);

/// Full expansion of the recursion down to n = 0:
///   sum_{p,q=0..n} C(n,p) C(n,q) K(m+n-p-q, k-n+p, k-n+q, 0).
std::int64_t kernel_diagonal_expansion(std::int64_t m, std::int64_t k, std::int64_t n);

/// K(1, k, k, n): 0 when 2k < n, else C(n,k)^2 - C(n,k+1)^2. Requires 0 <= k <= n.
std::int64_t kernel_closed_m1(std::int64_t k, std::int64_t n);

/// dim H^2(g4n2(n)): 8 for n = 1, 5n^2 + n otherwise.
std::int64_t h2_g4n2_closed(std::int64_t n);

/// Full Betti table of g2n2(n) by one of the formula methods
/// (closed_form, kernel_count, extension_lift). Throws BadParameter for
/// other methods or a negative value.
BettiTable formula_betti_table_g2n2(std::int64_t n, BettiMethod method);

}  // namespace liecohom
