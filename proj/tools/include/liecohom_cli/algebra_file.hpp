#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecohom/errors.hpp"
#include "liecohom/forms.hpp"
#include "liecohom/lie_algebra.hpp"

namespace liecohom::cli {

/// Malformed algebra file. line() and column() are 1-based and 0 when the
/// problem is structural rather than syntactic; path() names the offending
/// field in that case.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column, std::string path = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

/// The JSON interchange format:
///   {"dim": 3, "labels": [...], "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1/2"}}],
///    "form": [["1", "0", ...], ...], "omega": [[...], ...]}
/// Rationals are strings "p" or "p/q"; labels, form and omega are optional.
struct AlgebraFile {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<BracketEntry> brackets;
  std::optional<Matrix> form;
  std::optional<Matrix> omega;

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile read_algebra_file(const std::filesystem::path& path);

/// Pretty-printed JSON; parse_algebra_file(write_algebra_file(f)) == f for
/// files with canonical brackets.
std::string write_algebra_file(const AlgebraFile& file);

AlgebraFile to_algebra_file(const LieAlgebra& g, const std::optional<BilinearForm>& form = std::nullopt,
                            const std::optional<BilinearForm>& omega = std::nullopt);

/// Builds and validates the algebra (Jacobi, index ranges).
LieAlgebra to_lie_algebra(const AlgebraFile& file);

}  // namespace liecohom::cli
