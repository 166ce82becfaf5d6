#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "liecohom/exterior.hpp"
#include "liecohom/forms.hpp"
#include "liecohom/lie_algebra.hpp"
#include "liecohom/linalg.hpp"

namespace liecohom {

enum class DifferentialKind { standard, quadratic };

inline constexpr std::size_t kAllDegrees = std::numeric_limits<std::size_t>::max();

/// Cochain complex on the exterior algebra of an N-dimensional algebra.
/// differentials[k] maps degree k to degree k + 1 in colex monomial bases:
/// C(N, k+1) rows, C(N, k) columns; differentials[N] has no rows.
struct CochainComplex {
  std::size_t dimension = 0;
  DifferentialKind kind = DifferentialKind::standard;
  std::vector<SparseMatrix> differentials;

  /// Highest degree whose differential is present.
  std::size_t top_degree() const { return differentials.size() - 1; }
};

/// Matrix of the trivial-coefficient Chevalley-Eilenberg differential
///   (dw)(x_0..x_k) = sum_{i<j} (-1)^(i+j) w([x_i, x_j], x_0..^i..^j..x_k)
/// in degree k.
SparseMatrix standard_ce_matrix(const LieAlgebra& g, std::size_t k);

/// Matrix of w -> -{I, w} in degree k; `three` is the 3-form of (g, B).
SparseMatrix quadratic_matrix(const BilinearForm& form, const ExteriorForm& three, std::size_t k);

/// Degrees 0..min(N, max_degree). Both verify d^2 = 0 and throw Error
/// otherwise; the quadratic variant also throws FormNotInvariant or
/// DegenerateForm for a non-quadratic (g, B).
CochainComplex standard_ce_differential(const LieAlgebra& g, std::size_t max_degree = kAllDegrees);
CochainComplex quadratic_differential(const LieAlgebra& g, const BilinearForm& form,
                                      std::size_t max_degree = kAllDegrees);

/// True iff every composition differentials[k+1] * differentials[k] vanishes.
bool squares_to_zero(const CochainComplex& complex);

/// The quadratic differential -{I, w} of an arbitrary form.
ExteriorForm apply_quadratic_differential(const LieAlgebra& g, const BilinearForm& form,
                                          const ExteriorForm& w);

struct DegreeData {
  std::size_t k = 0;
  std::uint64_t cochains = 0;  ///< C(N, k)
  std::uint64_t rank = 0;      ///< rank of the differential leaving degree k
  std::uint64_t kernel = 0;    ///< cochains - rank
  std::uint64_t betti = 0;     ///< kernel - rank of the differential entering degree k
};

/// Per-degree rank, kernel and Betti data of a complex.
std::vector<DegreeData> analyze(const CochainComplex& complex);

enum class BettiMethod { bruteforce, quadratic, closed_form, kernel_count, extension_lift };

/// CLI token of a method: bruteforce, quadratic, theorem2, cor25, pouseele.
std::string method_name(BettiMethod m);
/// Inverse of method_name; throws BadParameter.
BettiMethod parse_method(const std::string& name);

struct BettiTable {
  std::vector<std::uint64_t> values;
  std::string label;
  BettiMethod method = BettiMethod::bruteforce;

  /// Alternating sum of the values.
  std::int64_t euler_characteristic() const;
  bool is_palindromic() const;
  friend bool operator==(const BettiTable& a, const BettiTable& b) = default;
};

/// Brute-force Betti numbers from the standard differential.
BettiTable betti_numbers(const LieAlgebra& g, std::size_t max_degree = kAllDegrees);

/// Betti numbers from -{I, .}; throws Error when the per-degree kernel or
/// rank disagrees with the standard differential.
BettiTable betti_numbers(const LieAlgebra& g, const BilinearForm& form,
                         std::size_t max_degree = kAllDegrees);

struct Degree2Spaces {
  Subspace cocycles;    ///< Z^2 in degree-2 monomial coordinates
  Subspace coboundaries;  ///< B^2
  std::size_t h2 = 0;
};

/// Z^2, B^2 and dim H^2 from the quadratic differential.
Degree2Spaces degree2_spaces(const LieAlgebra& g, const BilinearForm& form);

}  // namespace liecohom
