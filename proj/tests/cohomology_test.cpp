#include <gtest/gtest.h>

#include "liecohom/cohomology.hpp"
#include "liecohom/errors.hpp"
#include "liecohom/families.hpp"
#include "liecohom/formulas.hpp"
#include "oracle.hpp"

namespace liecohom {
namespace {

using Table = std::vector<std::uint64_t>;

ExteriorForm cov(std::size_t dim, std::size_t i) { return ExteriorForm::covector(dim, i); }

ExteriorForm apply_standard(const LieAlgebra& g, const ExteriorForm& w) {
  const std::size_t k = w.degree();
  const Vector image = standard_ce_matrix(g, k).to_dense().apply(w.coordinates(k));
  return ExteriorForm::from_coordinates(g.dim(), k + 1, image);
}

Subspace span_in_degree(std::size_t dim, std::size_t k, const std::vector<ExteriorForm>& forms) {
  std::vector<Vector> rows;
  for (const auto& f : forms) rows.push_back(f.coordinates(k));
  return Subspace::span(monomial_basis(dim, k).size(), rows);
}

// Monomials with chosen counts of factors from index sets a and b, times `prefix`.
std::vector<ExteriorForm> block(std::size_t dim, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                std::size_t ka, std::size_t kb, Monomial prefix = 0) {
  std::vector<ExteriorForm> out;
  const std::size_t n = a.size();
  for (Monomial sa = 0; sa < (Monomial{1} << n); ++sa) {
    if (static_cast<std::size_t>(__builtin_popcountll(sa)) != ka) continue;
    for (Monomial sb = 0; sb < (Monomial{1} << n); ++sb) {
      if (static_cast<std::size_t>(__builtin_popcountll(sb)) != kb) continue;
      Monomial m = prefix;
      for (std::size_t i = 0; i < n; ++i) {
        if (sa >> i & 1) m |= Monomial{1} << a[i];
        if (sb >> i & 1) m |= Monomial{1} << b[i];
      }
      out.push_back(ExteriorForm::from_mask(dim, m));
    }
  }
  return out;
}

TEST(Complex, ShapesAndSquareZero) {
  const LieAlgebra g = make_jordan(2).algebra;
  const CochainComplex c = standard_ce_differential(g);
  ASSERT_EQ(c.differentials.size(), 7u);
  for (std::size_t k = 0; k <= 6; ++k) {
    EXPECT_EQ(c.differentials[k].cols(), static_cast<std::size_t>(binomial(6, k)));
    EXPECT_EQ(c.differentials[k].rows(), static_cast<std::size_t>(binomial(6, k + 1)));
  }
  EXPECT_EQ(c.differentials[6].rows(), 0u);
  EXPECT_TRUE(squares_to_zero(c));
  EXPECT_EQ(standard_ce_differential(g, 2).top_degree(), 2u);
}

TEST(Complex, AbelianIsZero) {
  const LieAlgebra a = make_abelian(4);
  for (const auto& d : standard_ce_differential(a).differentials) EXPECT_TRUE(d.is_zero());
  for (const auto& d : quadratic_differential(a, BilinearForm::symmetric(Matrix::identity(4))).differentials)
    EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(betti_numbers(a).values, (Table{1, 4, 6, 4, 1}));
}

TEST(Complex, HeisenbergDegreeOne) {
  const LieAlgebra h = make_heisenberg(1);
  EXPECT_EQ(rank_exact(standard_ce_matrix(h, 1)), 1u);
  EXPECT_EQ(apply_standard(h, cov(3, 0)), -wedge(cov(3, 1), cov(3, 2)));
  EXPECT_EQ(betti_numbers(h).values, (Table{1, 2, 2, 1}));
}

TEST(Complex, StandardMatrixMatchesOracleEntrywise) {
  for (const LieAlgebra& g : {make_g2n2(2).algebra, make_jordan(2).algebra, make_f(2), make_g4n2(1).algebra}) {
    const std::size_t n = g.dim();
    for (std::size_t k = 0; k < n; ++k)
      for (Monomial m : monomial_basis(n, k)) {
        const ExteriorForm w = ExteriorForm::from_mask(n, m);
        EXPECT_EQ(oracle::from_library(apply_standard(g, w)), oracle::differential(g, oracle::from_library(w)));
      }
  }
}

TEST(Complex, QuadraticMatchesStandardOnQuadraticFamilies) {
  std::vector<QuadraticAlgebra> qs;
  for (std::size_t n = 1; n <= 4; ++n) qs.push_back(make_g2n2(n));
  for (std::size_t p = 2; p <= 4; ++p) {
    auto s = make_jordan(p);
    qs.push_back({s.algebra, s.form});
  }
  for (std::size_t n = 1; n <= 2; ++n) qs.push_back(make_g4n2(n));
  for (const auto& q : qs) {
    const CochainComplex c = quadratic_differential(q.algebra, q.form);
    EXPECT_TRUE(squares_to_zero(c));
    const auto a = analyze(c), b = analyze(standard_ce_differential(q.algebra));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].rank, b[k].rank);
      EXPECT_EQ(a[k].kernel, b[k].kernel);
    }
  }
}

TEST(Complex, QuadraticRequiresInvariantNondegenerateForm) {
  const LieAlgebra g4 = make_g2n2(1).algebra;
  EXPECT_THROW(quadratic_differential(g4, BilinearForm::symmetric(Matrix::identity(4))), FormNotInvariant);
  EXPECT_THROW(quadratic_differential(make_abelian(2), BilinearForm::symmetric(Matrix(2, 2))), DegenerateForm);
}

TEST(Betti, MatchOracleOnAllFamilies) {
  std::vector<LieAlgebra> gs = {make_abelian(3)};
  for (std::size_t n = 1; n <= 3; ++n) {
    gs.push_back(make_g2n2(n).algebra);
    gs.push_back(make_f(n));
    gs.push_back(make_heisenberg(n));
  }
  for (std::size_t p = 2; p <= 3; ++p) gs.push_back(make_jordan(p).algebra);
  gs.push_back(make_g4n2(1).algebra);
  for (const auto& g : gs) {
    const BettiTable t = betti_numbers(g);
    EXPECT_EQ(t.values, oracle::betti(g));
    EXPECT_EQ(t.euler_characteristic(), 0);
  }
}

TEST(Betti, KnownTables) {
  EXPECT_EQ(betti_numbers(make_g2n2(1).algebra).values, (Table{1, 1, 0, 1, 1}));
  auto g6 = make_g2n2(2);
  EXPECT_EQ(betti_numbers(g6.algebra).values, (Table{1, 1, 3, 6, 3, 1, 1}));
  const BettiTable q = betti_numbers(g6.algebra, g6.form);
  EXPECT_EQ(q.values, (Table{1, 1, 3, 6, 3, 1, 1}));
  EXPECT_EQ(q.method, BettiMethod::quadratic);
  EXPECT_EQ(betti_numbers(make_f(2)).values, (Table{1, 1, 4, 4, 1, 1}));
}

TEST(Betti, PoincareDualityOnQuadraticFamilies) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(betti_numbers(make_g2n2(n).algebra).is_palindromic());
  for (std::size_t n = 1; n <= 2; ++n) EXPECT_TRUE(betti_numbers(make_g4n2(n).algebra).is_palindromic());
  for (std::size_t p = 2; p <= 4; ++p) EXPECT_TRUE(betti_numbers(make_jordan(p).algebra).is_palindromic());
}

TEST(Betti, TruncatedDegrees) {
  const BettiTable t = betti_numbers(make_g2n2(3).algebra, 3);
  EXPECT_EQ(t.values, (Table{1, 1, 8, 8}));
}

TEST(Betti, MethodTokensRoundTrip) {
  for (auto m : {BettiMethod::bruteforce, BettiMethod::quadratic, BettiMethod::closed_form, BettiMethod::kernel_count,
                 BettiMethod::extension_lift})
    EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_THROW(parse_method("guess"), BadParameter);
}

TEST(Degree2, G6Spaces) {
  auto q = make_g2n2(2);
  EXPECT_EQ(rank_exact(quadratic_matrix(q.form, three_form(q.algebra, q.form), 2)), 7u);
  const Degree2Spaces s = degree2_spaces(q.algebra, q.form);
  EXPECT_EQ(s.cocycles.dim(), 8u);
  EXPECT_EQ(s.coboundaries.dim(), 5u);
  EXPECT_EQ(s.h2, 3u);
  EXPECT_TRUE(s.cocycles.contains(s.coboundaries));
}

TEST(Degree2, CocyclesAndCoboundariesOfG2n2) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto q = make_g2n2(n);
    const std::size_t dim = q.algebra.dim(), y0 = n + 1;
    const ExteriorForm beta = cov(dim, y0);
    std::vector<ExteriorForm> b2, z2;
    ExteriorForm om(dim);
    for (std::size_t i = 1; i <= n; ++i) {
      b2.push_back(wedge(beta, cov(dim, i)));
      b2.push_back(wedge(beta, cov(dim, y0 + i)));
      om += wedge(cov(dim, i), cov(dim, y0 + i));
      for (std::size_t j = 1; j <= n; ++j) z2.push_back(wedge(cov(dim, i), cov(dim, y0 + j)));
    }
    b2.push_back(om);
    z2.insert(z2.end(), b2.begin(), b2.end());
    const Degree2Spaces s = degree2_spaces(q.algebra, q.form);
    EXPECT_EQ(s.coboundaries, span_in_degree(dim, 2, b2));
    EXPECT_EQ(s.coboundaries.dim(), 2 * n + 1);
    EXPECT_EQ(s.cocycles, span_in_degree(dim, 2, z2));
    EXPECT_EQ(s.h2, n * n - 1);
    EXPECT_EQ(image_basis(quadratic_differential(q.algebra, q.form, 1).differentials[1]), s.coboundaries);
  }
}

TEST(Degree2, AbelianAndG4n2) {
  for (std::size_t m = 2; m <= 5; ++m) {
    const Degree2Spaces s = degree2_spaces(make_abelian(m), BilinearForm::symmetric(Matrix::identity(m)));
    EXPECT_EQ(s.h2, m * (m - 1) / 2);
  }
  auto q = make_g4n2(1);
  EXPECT_EQ(degree2_spaces(q.algebra, q.form).h2, 8u);
}

class G2n2Blocks : public ::testing::TestWithParam<std::size_t> {};

TEST_P(G2n2Blocks, DifferentialOnWeightBlocks) {
  const std::size_t n = GetParam();
  auto q = make_g2n2(n);
  const LieAlgebra& g = q.algebra;
  const std::size_t dim = g.dim(), y0 = n + 1;
  std::vector<std::size_t> a, b;
  for (std::size_t i = 1; i <= n; ++i) {
    a.push_back(i);
    b.push_back(y0 + i);
  }
  const Monomial alpha = 1, beta = Monomial{1} << y0;
  ExteriorForm om(dim);
  for (std::size_t i = 0; i < n; ++i) om += wedge(cov(dim, a[i]), cov(dim, b[i]));
  auto d = [&](const ExteriorForm& w) { return apply_quadratic_differential(g, q.form, w); };

  for (std::size_t i = 0; i <= n; ++i) {
    for (const auto& w : block(dim, a, b, i, i)) EXPECT_TRUE(d(w).is_zero());
    for (std::size_t j = 0; j <= n; ++j)
      for (const auto& w : block(dim, a, b, i, j, beta)) EXPECT_TRUE(d(w).is_zero());

    // alpha ^ beta ^ block(i, i) maps onto beta ^ Omega ^ block(i, i)
    {
      std::vector<ExteriorForm> src, dst;
      for (const auto& w : block(dim, a, b, i, i, alpha | beta)) src.push_back(d(w));
      for (const auto& w : block(dim, a, b, i, i)) dst.push_back(wedge(wedge(cov(dim, y0), om), w));
      const std::size_t k = 2 * i + 3;
      EXPECT_EQ(span_in_degree(dim, k, src), span_in_degree(dim, k, dst));
    }
    // alpha ^ block(i, i) maps onto Omega ^ block(i, i)
    {
      std::vector<ExteriorForm> src, dst;
      for (const auto& w : block(dim, a, b, i, i, alpha)) src.push_back(d(w));
      for (const auto& w : block(dim, a, b, i, i)) dst.push_back(wedge(om, w));
      const std::size_t k = 2 * i + 2;
      EXPECT_EQ(span_in_degree(dim, k, src), span_in_degree(dim, k, dst));
    }
    // off the diagonal, block(i, j) maps isomorphically onto beta ^ block(i, j)
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      std::vector<ExteriorForm> src, dst;
      for (const auto& w : block(dim, a, b, i, j)) {
        src.push_back(d(w));
        dst.push_back(wedge(cov(dim, y0), w));
      }
      const std::size_t k = i + j + 1;
      const Subspace s = span_in_degree(dim, k, src);
      EXPECT_EQ(s.dim(), src.size());
      EXPECT_EQ(s, span_in_degree(dim, k, dst));
    }
  }
}

TEST_P(G2n2Blocks, FDifferentialOnWeightBlocks) {
  const std::size_t n = GetParam();
  const LieAlgebra f = make_f(n);
  const std::size_t dim = f.dim();
  std::vector<std::size_t> x, y;
  for (std::size_t i = 1; i <= n; ++i) {
    x.push_back(i);
    y.push_back(n + i);
  }
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t l = 0; l <= n; ++l) {
      for (const auto& w : block(dim, x, y, j, l, 1)) EXPECT_TRUE(apply_standard(f, w).is_zero());
      const auto src = block(dim, x, y, j, l);
      std::vector<ExteriorForm> images, targets;
      for (const auto& w : src) {
        images.push_back(apply_standard(f, w));
        targets.push_back(wedge(cov(dim, 0), w));
      }
      const Subspace im = span_in_degree(dim, j + l + 1, images);
      if (j == l) {
        EXPECT_EQ(im.dim(), 0u);
      } else {
        EXPECT_EQ(im.dim(), static_cast<std::size_t>(binomial(n, j) * binomial(n, l)));
        EXPECT_EQ(im, span_in_degree(dim, j + l + 1, targets));
      }
    }
}

INSTANTIATE_TEST_SUITE_P(SmallN, G2n2Blocks, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace liecohom
