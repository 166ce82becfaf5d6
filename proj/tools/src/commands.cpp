#include "liecohom_cli/commands.hpp"

#include <algorithm>
#include <chrono>

#include "liecohom/formulas.hpp"

namespace liecohom::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

FamilySpec family_spec(const AlgebraSource& source) {
  FamilySpec spec;
  try {
    spec.id = parse_family_id(*source.family);
  } catch (const BadParameter&) {
    throw UnknownFamily("unknown family '" + *source.family + "'");
  }
  if (spec.id == FamilyId::jordan) {
    if (source.n) throw BadParameter("the jordan family takes --p, not --n");
    spec.parameter = source.p.value_or(2);
  } else {
    if (source.p) throw BadParameter("--p only applies to the jordan family");
    spec.parameter = source.n.value_or(1);
  }
  spec.validate();
  return spec;
}

}  // namespace

LoadedAlgebra load_algebra(const AlgebraSource& source) {
  if (source.family.has_value() == source.file.has_value())
    throw BadParameter("give either a family name or --file");

  LoadedAlgebra out;
  if (source.family) {
    FamilySpec spec = family_spec(source);
    FamilyInstance inst = make_family(spec);
    out.label = inst.label;
    out.algebra = std::move(inst.algebra);
    out.form = std::move(inst.form);
    out.omega = std::move(inst.omega);
    out.family = spec;
  } else {
    AlgebraFile file = read_algebra_file(*source.file);
    out.label = source.file->filename().string();
    out.algebra = to_lie_algebra(file);
    if (file.form) out.form = BilinearForm::symmetric(*file.form);
    if (file.omega) out.omega = BilinearForm::antisymmetric(*file.omega);
  }

  if (source.form) {
    if (*source.form != "identity") throw BadParameter("--form accepts only 'identity'");
    out.form = BilinearForm::symmetric(Matrix::identity(out.algebra.dim()));
  }
  return out;
}

ResultReport cmd_betti(const LoadedAlgebra& a, BettiMethod method, std::size_t max_degree) {
  const auto start = Clock::now();
  ResultReport report;
  report.label = a.label;
  report.method = method_name(method);
  report.dimension = a.algebra.dim();

  switch (method) {
    case BettiMethod::bruteforce:
      report.degrees = analyze(standard_ce_differential(a.algebra, max_degree));
      break;
    case BettiMethod::quadratic: {
      if (!a.form) throw MissingForm("the quadratic method needs an invariant form");
      report.degrees = analyze(quadratic_differential(a.algebra, *a.form, max_degree));
      break;
    }
    case BettiMethod::closed_form:
    case BettiMethod::kernel_count:
    case BettiMethod::extension_lift: {
      if (!a.family || a.family->id != FamilyId::g2n2)
        throw MethodNotApplicable("method " + report.method + " only applies to the g2n2 family");
      const auto n = static_cast<std::int64_t>(a.family->parameter);
      const BettiTable table = formula_betti_table_g2n2(n, method);
      const std::size_t top = std::min<std::size_t>(report.dimension, max_degree);
      for (std::size_t k = 0; k <= top; ++k) {
        DegreeData d;
        d.k = k;
        d.cochains = static_cast<std::uint64_t>(binomial(static_cast<std::int64_t>(report.dimension), static_cast<std::int64_t>(k)));
        d.kernel = static_cast<std::uint64_t>(kerdim_partial(n, static_cast<std::int64_t>(k)));
        d.rank = d.cochains - d.kernel;
        d.betti = table.values[k];
        report.degrees.push_back(d);
      }
      break;
    }
  }
  report.seconds = elapsed(start);
  return report;
}

H2Report cmd_h2(const LoadedAlgebra& a) {
  if (!a.form) throw MissingForm("h2 needs an invariant form; use --form identity or a file with \"form\"");
  const auto start = Clock::now();
  const Degree2Spaces spaces = degree2_spaces(a.algebra, *a.form);
  const DualBasisFrame frame = DualBasisFrame::from_algebra(a.algebra);
  const std::size_t dim = a.algebra.dim();

  H2Report report;
  report.label = a.label;
  report.dimension = dim;
  report.cocycles = spaces.cocycles.dim();
  report.coboundaries = spaces.coboundaries.dim();
  report.h2 = spaces.h2;
  for (const auto& v : spaces.cocycles.basis())
    report.cocycle_basis.push_back(frame.format(ExteriorForm::from_coordinates(dim, 2, v)));
  for (const auto& v : spaces.coboundaries.basis())
    report.coboundary_basis.push_back(frame.format(ExteriorForm::from_coordinates(dim, 2, v)));
  report.seconds = elapsed(start);
  return report;
}

std::string cmd_export(const LoadedAlgebra& a) {
  return write_algebra_file(to_algebra_file(a.algebra, a.form, a.omega));
}

}  // namespace liecohom::cli
