#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "liecohom/cohomology.hpp"
#include "liecohom/families.hpp"
#include "liecohom_cli/algebra_file.hpp"
#include "liecohom_cli/report.hpp"

namespace liecohom::cli {

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

class MethodNotApplicable : public Error {
 public:
  using Error::Error;
};

class MissingForm : public Error {
 public:
  using Error::Error;
};

/// Where an algebra comes from: a named family with its parameter, or a
/// JSON file. `form` may be "identity" to override the file's form.
struct AlgebraSource {
  std::optional<std::string> family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> p;
  std::optional<std::filesystem::path> file;
  std::optional<std::string> form;
};

struct LoadedAlgebra {
  std::string label;
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
  std::optional<BilinearForm> omega;
  std::optional<FamilySpec> family;
};

/// Throws UnknownFamily, ParseError, BadParameter or any validation error
/// of the core library.
LoadedAlgebra load_algebra(const AlgebraSource& source);

/// Betti table by the requested method. Formula methods exist only for the
/// g2n2 family (MethodNotApplicable otherwise); quadratic needs a form
/// (MissingForm).
ResultReport cmd_betti(const LoadedAlgebra& a, BettiMethod method, std::size_t max_degree = kAllDegrees);

/// Degree-2 cocycles and coboundaries of the quadratic differential.
H2Report cmd_h2(const LoadedAlgebra& a);

/// AlgebraFile JSON of the loaded algebra, forms included.
std::string cmd_export(const LoadedAlgebra& a);

}  // namespace liecohom::cli
