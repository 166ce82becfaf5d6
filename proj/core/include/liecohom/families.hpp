#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "liecohom/forms.hpp"
#include "liecohom/lie_algebra.hpp"

namespace liecohom {

enum class FamilyId { g2n2, jordan, heisenberg, f, g4n2 };

/// CLI identifier of a family ("g2n2", "jordan", ...).
std::string family_name(FamilyId id);
/// Throws BadParameter for an unknown identifier.
FamilyId parse_family_id(const std::string& name);

struct FamilySpec {
  FamilyId id = FamilyId::g2n2;
  std::size_t parameter = 1;  ///< n, or p for the Jordan-type family

  /// Throws BadParameter when the parameter is below the family minimum.
  void validate() const;
  std::string label() const;
};

struct QuadraticAlgebra {
  LieAlgebra algebra;
  BilinearForm form;
};

struct SymplecticQuadraticAlgebra {
  LieAlgebra algebra;
  BilinearForm form;
  BilinearForm omega;
};

/// Basis X0..Xn, Y0..Yn; [Y0,Xi] = Xi, [Y0,Yi] = -Yi, [Xi,Yi] = X0, with
/// B(Xi, Yi) = 1 for 0 <= i <= n. Solvable, dimension 2n + 2.
QuadraticAlgebra make_g2n2(std::size_t n);

/// Nilpotent Jordan-type algebra of dimension 2p + 2 on X0..Xp, Y0..Yp:
/// [Y0, X] = C(X) and [X, Y] = B(C(X), Y) X0 for X, Y in span{Xi, Yi},
/// where C = diag(J_p, -J_p^T) and J_p is the nilpotent Jordan block. The
/// symplectic form is a^b + sum_i i * a_i^b_i.
SymplecticQuadraticAlgebra make_jordan(std::size_t p);

/// x0, x1..xn, y1..yn with [xi, yi] = x0.
LieAlgebra make_heisenberg(std::size_t n);

/// y, x1..xn, y1..yn with [y, xi] = xi, [y, yi] = -yi.
LieAlgebra make_f(std::size_t n);

/// 2-step nilpotent quadratic algebra of dimension 4n + 2 on
/// X, X1..X2n, Y, Y1..Y2n: [Y, Y(2i-1)] = X(2i), [Y, Y(2i)] = -X(2i-1),
/// [Y(2i-1), Y(2i)] = X, with B(X, Y) = B(Xi, Yi) = 1.
QuadraticAlgebra make_g4n2(std::size_t n);

/// Abelian algebra of dimension m.
LieAlgebra make_abelian(std::size_t m);

struct FamilyInstance {
  std::string label;
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
  std::optional<BilinearForm> omega;
};

FamilyInstance make_family(const FamilySpec& spec);

}  // namespace liecohom
