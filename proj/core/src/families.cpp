#include "liecohom/families.hpp"

#include "liecohom/errors.hpp"

namespace liecohom {
namespace {

std::vector<std::string> indexed(const std::string& stem, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Gram matrix pairing index i with index i + half.
Matrix hyperbolic(std::size_t half) {
  Matrix g(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    g(i, half + i) = 1;
    g(half + i, i) = 1;
  }
  return g;
}

void require_at_least(std::size_t value, std::size_t minimum, const char* what) {
  if (value < minimum)
    throw BadParameter(std::string(what) + " must be at least " + std::to_string(minimum));
}

}  // namespace

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::g2n2: return "g2n2";
    case FamilyId::jordan: return "jordan";
    case FamilyId::heisenberg: return "heisenberg";
    case FamilyId::f: return "f";
    case FamilyId::g4n2: return "g4n2";
  }
  return "unknown";
}

FamilyId parse_family_id(const std::string& name) {
  for (auto id : {FamilyId::g2n2, FamilyId::jordan, FamilyId::heisenberg, FamilyId::f, FamilyId::g4n2})
    if (family_name(id) == name) return id;
  throw BadParameter("unknown family '" + name + "'");
}

void FamilySpec::validate() const {
  require_at_least(parameter, id == FamilyId::jordan ? 2 : 1,
                   id == FamilyId::jordan ? "p" : "n");
}

std::string FamilySpec::label() const {
  return family_name(id) + (id == FamilyId::jordan ? "(p=" : "(n=") + std::to_string(parameter) + ")";
}

QuadraticAlgebra make_g2n2(std::size_t n) {
  require_at_least(n, 1, "n");
  const std::size_t y0 = n + 1;
  std::vector<BracketEntry> br;
  for (std::size_t i = 1; i <= n; ++i) {
    br.push_back({y0, i, {{i, 1}}});
    br.push_back({y0, y0 + i, {{y0 + i, -1}}});
    br.push_back({i, y0 + i, {{0, 1}}});
  }
  auto g = build_lie_algebra(2 * n + 2, concat(indexed("X", 0, n), indexed("Y", 0, n)), br);
  return {std::move(g), BilinearForm::symmetric(hyperbolic(n + 1))};
}

SymplecticQuadraticAlgebra make_jordan(std::size_t p) {
  require_at_least(p, 2, "p");
  const std::size_t dim = 2 * p + 2;
  const std::size_t y0 = p + 1;
  auto x = [](std::size_t i) { return i; };
  auto y = [y0](std::size_t i) { return y0 + i; };

  // C on span{X1..Xp, Y1..Yp}: C X_b = X_{b-1}, C Y_b = -Y_{b+1}.
  Matrix c(dim, dim);
  for (std::size_t b = 2; b <= p; ++b) c(x(b - 1), x(b)) = 1;
  for (std::size_t b = 1; b < p; ++b) c(y(b + 1), y(b)) = -1;

  const Matrix gram = hyperbolic(p + 1);
  std::vector<std::size_t> q;
  for (std::size_t i = 1; i <= p; ++i) q.push_back(x(i));
  for (std::size_t i = 1; i <= p; ++i) q.push_back(y(i));

  std::vector<BracketEntry> br;
  for (auto u : q) {
    BracketEntry e{y0, u, {}};
    for (std::size_t r = 0; r < dim; ++r)
      if (!is_zero(c(r, u))) e.coeffs.emplace_back(r, c(r, u));
    if (!e.coeffs.empty()) br.push_back(std::move(e));
  }
  for (std::size_t s = 0; s < q.size(); ++s)
    for (std::size_t t = s + 1; t < q.size(); ++t) {
      Scalar v = 0;  // B(C u, w)
      for (std::size_t r = 0; r < dim; ++r) v += c(r, q[s]) * gram(r, q[t]);
      if (!is_zero(v)) br.push_back({q[s], q[t], {{x(0), v}}});
    }

  auto g = build_lie_algebra(dim, concat(indexed("X", 0, p), indexed("Y", 0, p)), br);
  Matrix w(dim, dim);
  for (std::size_t i = 0; i <= p; ++i) {
    const Scalar weight = i == 0 ? Scalar(1) : Scalar(static_cast<long>(i));
    w(x(i), y(i)) = weight;
    w(y(i), x(i)) = -weight;
  }
  return {std::move(g), BilinearForm::symmetric(gram), BilinearForm::antisymmetric(std::move(w))};
}

LieAlgebra make_heisenberg(std::size_t n) {
  require_at_least(n, 1, "n");
  std::vector<BracketEntry> br;
  for (std::size_t i = 1; i <= n; ++i) br.push_back({i, n + i, {{0, 1}}});
  return build_lie_algebra(2 * n + 1, concat(indexed("x", 0, n), indexed("y", 1, n)), br);
}

LieAlgebra make_f(std::size_t n) {
  require_at_least(n, 1, "n");
  std::vector<BracketEntry> br;
  for (std::size_t i = 1; i <= n; ++i) {
    br.push_back({0, i, {{i, 1}}});
    br.push_back({0, n + i, {{n + i, -1}}});
  }
  return build_lie_algebra(2 * n + 1,
                           concat(concat({"y"}, indexed("x", 1, n)), indexed("y", 1, n)), br);
}

QuadraticAlgebra make_g4n2(std::size_t n) {
  require_at_least(n, 1, "n");
  const std::size_t half = 2 * n + 1;
  const std::size_t y = half;
  std::vector<BracketEntry> br;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t odd = 2 * i - 1, even = 2 * i;
    br.push_back({y, y + odd, {{even, 1}}});
    br.push_back({y, y + even, {{odd, -1}}});
    br.push_back({y + odd, y + even, {{0, 1}}});
  }
  auto labels = concat(concat({"X"}, indexed("X", 1, 2 * n)), concat({"Y"}, indexed("Y", 1, 2 * n)));
  auto g = build_lie_algebra(2 * half, std::move(labels), br);
  return {std::move(g), BilinearForm::symmetric(hyperbolic(half))};
}

LieAlgebra make_abelian(std::size_t m) { return build_lie_algebra(m, {}, {}); }

FamilyInstance make_family(const FamilySpec& spec) {
  spec.validate();
  FamilyInstance out;
  out.label = spec.label();
  switch (spec.id) {
    case FamilyId::g2n2: {
      auto q = make_g2n2(spec.parameter);
      out.algebra = std::move(q.algebra);
      out.form = std::move(q.form);
      break;
    }
    case FamilyId::jordan: {
      auto s = make_jordan(spec.parameter);
      out.algebra = std::move(s.algebra);
      out.form = std::move(s.form);
      out.omega = std::move(s.omega);
      break;
    }
    case FamilyId::heisenberg: out.algebra = make_heisenberg(spec.parameter); break;
    case FamilyId::f: out.algebra = make_f(spec.parameter); break;
    case FamilyId::g4n2: {
      auto q = make_g4n2(spec.parameter);
      out.algebra = std::move(q.algebra);
      out.form = std::move(q.form);
      break;
    }
  }
  return out;
}

}  // namespace liecohom
