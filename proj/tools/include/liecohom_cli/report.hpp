#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "liecohom/cohomology.hpp"

namespace liecohom::cli {

enum class OutputFormat { table, json, csv };

/// Throws BadParameter for anything but table, json or csv.
OutputFormat parse_format(const std::string& name);

struct ResultReport {
  std::string label;
  std::string method;
  std::size_t dimension = 0;
  /// Degrees 0..top; b_k is only meaningful when the entering differential
  /// was computed too, which holds for every listed degree.
  std::vector<DegreeData> degrees;
  double seconds = 0.0;

  std::vector<std::uint64_t> betti() const;
  /// Whether every degree up to the dimension is present.
  bool complete() const { return degrees.size() == dimension + 1; }
  /// b_k = ker_k - rank_{k-1} everywhere and, for complete reports, a
  /// vanishing alternating sum.
  bool consistent() const;
};

std::string render(const ResultReport& report, OutputFormat format);

struct H2Report {
  std::string label;
  std::size_t dimension = 0;
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t h2 = 0;
  /// Echelon bases written as 2-forms in the dual basis.
  std::vector<std::string> cocycle_basis;
  std::vector<std::string> coboundary_basis;
  double seconds = 0.0;
};

std::string render(const H2Report& report, OutputFormat format);

/// "[1,1,3,6,3,1,1]"
std::string format_list(const std::vector<std::uint64_t>& values);

}  // namespace liecohom::cli
