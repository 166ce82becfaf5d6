#include "liecohom_cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "liecohom/errors.hpp"
#include "liecohom/families.hpp"
#include "liecohom/formulas.hpp"

namespace liecohom::cli {
namespace {

using Checks = std::vector<CheckResult>;

void record(Checks& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

// Runs body and turns any library error into a failed check.
void guarded(Checks& out, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    record(out, name, false, std::string("error: ") + e.what());
  }
}

std::vector<std::uint64_t> column(const std::vector<DegreeData>& rows, std::uint64_t DegreeData::*field) {
  std::vector<std::uint64_t> out;
  for (const auto& r : rows) out.push_back(r.*field);
  return out;
}

std::vector<std::uint64_t> as_unsigned(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

void differential_checks(Checks& out, const std::string& label, const LieAlgebra& g,
                         const std::optional<BilinearForm>& form) {
  guarded(out, label, [&] {
    const CochainComplex standard = standard_ce_differential(g);
    record(out, label + " standard d^2 = 0", squares_to_zero(standard));
    if (!form) return;
    const CochainComplex quadratic = quadratic_differential(g, *form);
    record(out, label + " quadratic d^2 = 0", squares_to_zero(quadratic));
    const auto a = analyze(standard);
    const auto b = analyze(quadratic);
    const auto ra = column(a, &DegreeData::rank);
    const auto rb = column(b, &DegreeData::rank);
    record(out, label + " per-degree ranks agree", ra == rb, "standard " + format_list(ra) + " quadratic " + format_list(rb));
  });
}

Checks suite_differentials(const VerifyBounds& b) {
  Checks out;
  for (std::size_t n = 1; n <= b.max_n; ++n) {
    auto q = make_g2n2(n);
    differential_checks(out, "g2n2(n=" + std::to_string(n) + ")", q.algebra, q.form);
  }
  for (std::size_t p = 2; p <= b.max_p; ++p) {
    auto s = make_jordan(p);
    differential_checks(out, "jordan(p=" + std::to_string(p) + ")", s.algebra, s.form);
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(b.max_n, 2); ++n) {
    auto q = make_g4n2(n);
    differential_checks(out, "g4n2(n=" + std::to_string(n) + ")", q.algebra, q.form);
  }
  for (std::size_t n = 1; n <= b.max_n; ++n) {
    differential_checks(out, "heisenberg(n=" + std::to_string(n) + ")", make_heisenberg(n), std::nullopt);
    differential_checks(out, "f(n=" + std::to_string(n) + ")", make_f(n), std::nullopt);
  }
  return out;
}

Checks suite_formulas(const VerifyBounds& b) {
  Checks out;
  for (std::size_t n = 1; n <= b.max_n; ++n) {
    const std::string label = "g2n2(n=" + std::to_string(n) + ")";
    const auto sn = static_cast<std::int64_t>(n);
    guarded(out, label, [&] {
      auto q = make_g2n2(n);
      const auto brute = betti_numbers(q.algebra).values;
      for (auto m : {BettiMethod::closed_form, BettiMethod::kernel_count, BettiMethod::extension_lift}) {
        const auto formula = formula_betti_table_g2n2(sn, m).values;
        record(out, label + " " + method_name(m) + " = bruteforce", formula == brute,
               format_list(formula) + " vs " + format_list(brute));
      }
      const std::uint64_t b2 = brute.size() > 2 ? brute[2] : 0;
      record(out, label + " b2 = n^2 - 1", b2 == n * n - 1, "b2 = " + std::to_string(b2));

      const auto kernels = column(analyze(quadratic_differential(q.algebra, q.form)), &DegreeData::kernel);
      std::vector<std::int64_t> partial;
      for (std::int64_t k = 0; k <= 2 * sn + 2; ++k) partial.push_back(kerdim_partial(sn, k));
      record(out, label + " kernel dimensions", as_unsigned(partial) == kernels,
             format_list(as_unsigned(partial)) + " vs " + format_list(kernels));
    });
    guarded(out, "f(n=" + std::to_string(n) + ")", [&] {
      const auto brute = betti_numbers(make_f(n)).values;
      std::vector<std::uint64_t> closed;
      for (std::int64_t k = 0; k <= 2 * sn + 1; ++k) closed.push_back(betti_f_closed(sn, k));
      record(out, "f(n=" + std::to_string(n) + ") squared binomials", closed == brute,
             format_list(closed) + " vs " + format_list(brute));
    });
  }
  return out;
}

Checks suite_kernels(const VerifyBounds& b) {
  Checks out;
  const auto max_n = static_cast<std::int64_t>(b.max_n);
  const auto max_m = static_cast<std::int64_t>(b.max_m);
  for (std::int64_t m = 1; m <= max_m; ++m) {
    for (std::int64_t n = 1; n <= max_n; ++n) {
      KernelRecursion rec;
      int bad = 0, asym = 0;
      std::string first;
      for (std::int64_t k1 = 0; k1 <= n; ++k1) {
        for (std::int64_t k2 = 0; k2 <= n; ++k2) {
          const auto oracle = static_cast<std::int64_t>(phi_kernel_oracle(m, k1, k2, n));
          const auto value = rec({m, k1, k2, n});
          if (value != oracle) {
            if (!bad++) first = " first at k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
          }
          if (phi_kernel_oracle(m, k1, k2, n) != phi_kernel_oracle(m, k2, k1, n)) ++asym;
        }
      }
      const std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      record(out, "recursion = oracle " + tag, bad == 0, std::to_string(bad) + " mismatches" + first);
      record(out, "oracle symmetric " + tag, asym == 0);
    }
  }
  for (std::int64_t n = 0; n <= max_n; ++n) {
    int bad = 0;
    for (std::int64_t k = 0; k <= n; ++k)
      if (kernel_closed_m1(k, n) != static_cast<std::int64_t>(phi_kernel_oracle(1, k, k, n))) ++bad;
    record(out, "m=1 closed form = oracle n=" + std::to_string(n), bad == 0, std::to_string(bad) + " mismatches");
  }
  for (std::int64_t m = 1; m <= std::min<std::int64_t>(2, max_m); ++m) {
    for (std::int64_t n = 0; n <= max_n; ++n) {
      int bad = 0;
      for (std::int64_t k = 0; k <= n; ++k)
        if (kernel_diagonal_expansion(m, k, n) != kernel_recursive({m, k, k, n})) ++bad;
      record(out, "diagonal expansion = recursion m=" + std::to_string(m) + " n=" + std::to_string(n), bad == 0,
             std::to_string(bad) + " mismatches");
    }
  }
  return out;
}

// Scalar c with a = c * b, if any.
std::optional<Scalar> proportional(const Matrix& a, const Matrix& b) {
  std::optional<Scalar> c;
  for (std::size_t t = 0; t < a.flat().size(); ++t) {
    const Scalar& x = a.flat()[t];
    const Scalar& y = b.flat()[t];
    if (y == 0) {
      if (x != 0) return std::nullopt;
      continue;
    }
    Scalar r = x / y;
    if (c && *c != r) return std::nullopt;
    c = r;
  }
  return c;
}

Checks suite_symplectic(const VerifyBounds& b) {
  Checks out;
  for (std::size_t p = 2; p <= b.max_p; ++p) {
    const std::string label = "jordan(p=" + std::to_string(p) + ")";
    guarded(out, label, [&] {
      auto s = make_jordan(p);
      const LieAlgebra& g = s.algebra;
      record(out, label + " symplectic", symplectic_check(g, s.form, s.omega));
      const AdDerivation d = symplectic_ad_derivation(g, s.form, s.omega);
      record(out, label + " induced map is a derivation of ad(g)", d.leibniz);
      record(out, label + " induced map is invertible", d.invertible);

      // expected factors: -1 on Y0, i on Xi, -i on Yi
      std::ostringstream eigen;
      bool ok = true;
      for (std::size_t u = 0; u < g.dim(); ++u) {
        const Matrix ad = adjoint(g, u);
        if (ad.is_zero()) continue;
        Scalar expected = u == p + 1 ? Scalar(-1) : u <= p ? Scalar(static_cast<long>(u)) : Scalar(-static_cast<long>(u - p - 1));
        const Matrix image = d.apply_to_ad(g, g.basis_vector(u));
        const auto c = proportional(image, ad);
        if (!c || *c != expected) ok = false;
        eigen << " " << g.labels()[u] << ":" << (c ? to_string(*c) : std::string("none"));
      }
      record(out, label + " action on ad basis", ok, "factors" + eigen.str());
    });
  }
  return out;
}

Checks suite_appendix2(const VerifyBounds& b) {
  Checks out;
  for (std::size_t n = 1; n <= b.max_n; ++n) {
    const std::string label = "g4n2(n=" + std::to_string(n) + ")";
    guarded(out, label, [&] {
      auto q = make_g4n2(n);
      const LieAlgebra& g = q.algebra;
      const std::size_t N = g.dim();
      const ExteriorForm I = three_form(g, q.form);
      const std::size_t y = 2 * n + 1;
      auto a = [&](std::size_t i) { return ExteriorForm::covector(N, i); };
      auto bt = [&](std::size_t i) { return ExteriorForm::covector(N, y + i); };
      auto w = [&](std::initializer_list<ExteriorForm> fs) {
        ExteriorForm r = ExteriorForm::scalar(N, 1);
        for (const auto& f : fs) r = wedge(r, f);
        return r;
      };
      auto P = [&](const ExteriorForm& f) { return super_poisson(q.form, I, f); };
      const ExteriorForm zero(N);
      ExteriorForm omega(N);
      for (std::size_t i = 1; i <= n; ++i) omega += w({bt(2 * i - 1), bt(2 * i)});

      record(out, label + " I = b^Omega", I == wedge(bt(0), omega));

      std::vector<int> bad(9, 0);
      for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t o = 2 * i - 1, e = 2 * i;
        for (std::size_t k = 1; k <= 2 * n; ++k) bad[1] += !(P(w({bt(0), a(k)})) == zero);
        bad[1] += !(P(w({a(o), bt(e)})) == zero);
        bad[1] += !(P(w({a(e), bt(o)})) == zero);
        bad[3] += !(P(w({a(0), bt(o)})) == w({bt(o), omega}));
        bad[3] += !(P(w({a(0), bt(e)})) == w({bt(e), omega}));
        bad[4] += !(P(w({a(0), a(o)})) == w({a(o), omega}) + w({bt(0), bt(e), a(0)}));
        bad[4] += !(P(w({a(0), a(e)})) == w({a(e), omega}) - w({bt(0), bt(o), a(0)}));
        for (std::size_t j = 1; j <= n; ++j) {
          const std::size_t oj = 2 * j - 1, ej = 2 * j;
          if (i != j) bad[5] += !(P(w({a(o), a(ej)})) == -w({bt(0), bt(e), a(ej)}) - w({bt(0), bt(oj), a(o)}));
          if (i < j) bad[5] += !(P(w({a(e), a(ej)})) == w({bt(0), bt(o), a(ej)}) - w({bt(0), bt(oj), a(e)}));
          if (i != j) {
            bad[6] += !(P(w({a(o), bt(ej)})) == -w({bt(0), bt(e), bt(ej)}));
            bad[6] += !(P(w({a(oj), bt(e)})) == w({bt(0), bt(e), bt(ej)}));
          }
          bad[7] += !(P(w({a(o), bt(oj)})) == -w({bt(0), bt(e), bt(oj)}));
          bad[7] += !(P(w({a(ej), bt(e)})) == -w({bt(0), bt(e), bt(oj)}));
          if (i != j) {
            bad[8] += !(P(w({a(e), bt(oj)})) == w({bt(0), bt(o), bt(oj)}));
            bad[8] += !(P(w({a(ej), bt(o)})) == -w({bt(0), bt(o), bt(oj)}));
          }
        }
      }
      bad[2] += !(P(w({a(0), bt(0)})) == I);
      for (int t = 1; t <= 8; ++t)
        record(out, label + " bracket identity " + std::to_string(t), bad[t] == 0, std::to_string(bad[t]) + " mismatches");

      const std::size_t h2 = degree2_spaces(g, q.form).h2;
      const std::size_t outer = skew_derivation_space(g, q.form).dim() - inner_derivations(g).dim();
      record(out, label + " H2 = skew derivations mod inner", h2 == outer,
             std::to_string(h2) + " vs " + std::to_string(outer));
      const auto expected = h2_g4n2_closed(static_cast<std::int64_t>(n));
      record(out, label + " H2 closed form", static_cast<std::int64_t>(h2) == expected,
             "computed " + std::to_string(h2) + ", closed form " + std::to_string(expected));
    });
  }
  return out;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"differentials", "formulas", "kernels", "symplectic", "appendix2"};
  return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyBounds& bounds) {
  VerifyReport report;
  report.suite = suite;
  if (suite == "differentials") report.checks = suite_differentials(bounds);
  else if (suite == "formulas") report.checks = suite_formulas(bounds);
  else if (suite == "kernels") report.checks = suite_kernels(bounds);
  else if (suite == "symplectic") report.checks = suite_symplectic(bounds);
  else if (suite == "appendix2") report.checks = suite_appendix2(bounds);
  else throw BadParameter("unknown suite '" + suite + "'");
  return report;
}

std::string render(const VerifyReport& report, OutputFormat format) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed;
  switch (format) {
    case OutputFormat::table:
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
      }
      out << report.suite << ": " << passed << "/" << report.checks.size() << " passed\n";
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["suite"] = report.suite;
      doc["passed"] = report.passed();
      auto checks = nlohmann::ordered_json::array();
      for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      doc["checks"] = checks;
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "name,passed,detail\n";
      for (const auto& c : report.checks) {
        std::string detail = c.detail;
        std::replace(detail.begin(), detail.end(), '"', '\'');
        out << "\"" << c.name << "\"," << (c.passed ? "true" : "false") << ",\"" << detail << "\"\n";
      }
      break;
  }
  return out.str();
}

}  // namespace liecohom::cli
