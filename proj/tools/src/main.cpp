#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "liecohom_cli/commands.hpp"
#include "liecohom_cli/verify.hpp"

namespace {

using namespace liecohom;
using namespace liecohom::cli;

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::optional<std::string> family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> p;
  std::optional<std::string> file;
  std::optional<std::string> form;
  std::string method = "bruteforce";
  std::string format = "table";
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_m;
  std::optional<std::size_t> max_p;
  std::optional<std::string> out;
  std::string suite;
};

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("family", o.family, "g2n2, jordan, heisenberg, f or g4n2");
  cmd->add_option("--n", o.n, "family parameter n");
  cmd->add_option("--p", o.p, "parameter p of the jordan family");
  cmd->add_option("--file", o.file, "algebra file (JSON)");
  cmd->add_option("--form", o.form, "replace the invariant form ('identity')");
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", o.out, "write to this file instead of stdout");
}

AlgebraSource source_of(const Options& o) {
  AlgebraSource s;
  s.family = o.family;
  s.n = o.n;
  s.p = o.p;
  if (o.file) s.file = *o.file;
  s.form = o.form;
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (!o.out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*o.out, std::ios::binary);
  if (!f) throw BadParameter("cannot write " + *o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie algebra cohomology"};
  app.require_subcommand(1);
  Options o;

  auto* betti = app.add_subcommand("betti", "Betti table of a family or file");
  add_source(betti, o);
  add_output(betti, o);
  betti->add_option("--method", o.method, "bruteforce, quadratic, theorem2, cor25 or pouseele");
  betti->add_option("--max-degree", o.max_degree, "stop after this degree");

  auto* h2 = app.add_subcommand("h2", "degree-2 cocycles, coboundaries and H2");
  add_source(h2, o);
  add_output(h2, o);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "differentials, formulas, kernels, symplectic or appendix2")->required();
  verify->add_option("--max-n", o.max_n);
  verify->add_option("--max-m", o.max_m);
  verify->add_option("--max-p", o.max_p);
  add_output(verify, o);

  auto* exp = app.add_subcommand("export", "write an algebra file");
  add_source(exp, o);
  exp->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (betti->parsed()) {
      const LoadedAlgebra a = load_algebra(source_of(o));
      const ResultReport r = cmd_betti(a, parse_method(o.method), o.max_degree.value_or(kAllDegrees));
      emit(o, render(r, parse_format(o.format)));
      return 0;
    }
    if (h2->parsed()) {
      const LoadedAlgebra a = load_algebra(source_of(o));
      emit(o, render(cmd_h2(a), parse_format(o.format)));
      return 0;
    }
    if (exp->parsed()) {
      emit(o, cmd_export(load_algebra(source_of(o))));
      return 0;
    }
    if (verify->parsed()) {
      VerifyBounds bounds;
      if (o.max_n) bounds.max_n = *o.max_n;
      if (o.max_m) bounds.max_m = *o.max_m;
      if (o.max_p) bounds.max_p = *o.max_p;
      const VerifyReport r = run_suite(o.suite, bounds);
      emit(o, render(r, parse_format(o.format)));
      return r.passed() ? 0 : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
