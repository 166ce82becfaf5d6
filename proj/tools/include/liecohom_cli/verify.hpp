#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecohom_cli/report.hpp"

namespace liecohom::cli {

struct VerifyBounds {
  std::size_t max_n = 3;
  std::size_t max_m = 3;
  std::size_t max_p = 4;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Suites: differentials, formulas, kernels, symplectic, appendix2.
const std::vector<std::string>& suite_names();

/// Throws BadParameter for an unknown suite.
VerifyReport run_suite(const std::string& suite, const VerifyBounds& bounds);

std::string render(const VerifyReport& report, OutputFormat format);

}  // namespace liecohom::cli
