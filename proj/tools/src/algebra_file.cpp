#include "liecohom_cli/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "liecohom/rational.hpp"

namespace liecohom::cli {
namespace {

using nlohmann::json;

std::string position_suffix(std::size_t line, std::size_t column) {
  if (line == 0) return {};
  return " at line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(message, 0, 0, path);
}

void allow_only(const json& object, const std::set<std::string>& keys, const std::string& path) {
  for (const auto& [key, value] : object.items()) {
    if (!keys.count(key)) fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

std::size_t natural(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return value.get<std::size_t>();
}

Scalar rational(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a rational string such as \"3/4\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

std::size_t index_key(const std::string& key, std::size_t dim, const std::string& path) {
  if (key.empty() || key.size() > 18 || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(path, "coefficient keys must be basis indices");
  std::size_t k = std::stoull(key);
  if (k >= dim) fail(path, "basis index " + key + " out of range");
  return k;
}

Matrix square_matrix(const json& value, std::size_t dim, const std::string& path) {
  if (!value.is_array() || value.size() != dim) fail(path, "expected " + std::to_string(dim) + " rows");
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::string row_path = path + "[" + std::to_string(r) + "]";
    const json& row = value[r];
    if (!row.is_array() || row.size() != dim) fail(row_path, "expected " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rational(row[c], row_path + "[" + std::to_string(c) + "]");
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column, std::string path)
    : Error((path.empty() ? std::string() : path + ": ") + what + position_suffix(line, column)),
      line_(line),
      column_(column),
      path_(std::move(path)) {}

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the byte that stopped the parser
    std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("invalid JSON", line, column);
  }

  if (!doc.is_object()) fail("", "top level must be an object");
  allow_only(doc, {"dim", "labels", "brackets", "form", "omega"}, "");

  AlgebraFile file;
  if (!doc.contains("dim")) fail("dim", "missing");
  file.dim = natural(doc["dim"], "dim");

  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != file.dim) fail("labels", "expected " + std::to_string(file.dim) + " strings");
    for (std::size_t t = 0; t < labels.size(); ++t) {
      if (!labels[t].is_string()) fail("labels[" + std::to_string(t) + "]", "expected a string");
      file.labels.push_back(labels[t].get<std::string>());
    }
  }

  if (doc.contains("brackets")) {
    const json& brackets = doc["brackets"];
    if (!brackets.is_array()) fail("brackets", "expected an array");
    for (std::size_t t = 0; t < brackets.size(); ++t) {
      std::string path = "brackets[" + std::to_string(t) + "]";
      const json& rec = brackets[t];
      if (!rec.is_object()) fail(path, "expected an object");
      allow_only(rec, {"i", "j", "coeffs"}, path);
      if (!rec.contains("i") || !rec.contains("j") || !rec.contains("coeffs")) fail(path, "needs i, j and coeffs");
      BracketEntry entry;
      entry.i = natural(rec["i"], path + ".i");
      entry.j = natural(rec["j"], path + ".j");
      if (entry.j >= file.dim) fail(path + ".j", "basis index out of range");
      if (entry.i >= entry.j) fail(path, "requires i < j");
      const json& coeffs = rec["coeffs"];
      if (!coeffs.is_object()) fail(path + ".coeffs", "expected an object");
      for (const auto& [key, value] : coeffs.items()) {
        std::string cpath = path + ".coeffs." + key;
        std::size_t k = index_key(key, file.dim, cpath);
        Scalar c = rational(value, cpath);
        if (!is_zero(c)) entry.coeffs.emplace_back(k, c);
      }
      std::sort(entry.coeffs.begin(), entry.coeffs.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      file.brackets.push_back(std::move(entry));
    }
  }

  if (doc.contains("form")) file.form = square_matrix(doc["form"], file.dim, "form");
  if (doc.contains("omega")) file.omega = square_matrix(doc["omega"], file.dim, "omega");
  return file;
}

AlgebraFile read_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_file(buffer.str());
}

std::string write_algebra_file(const AlgebraFile& file) {
  json doc = json::object();
  doc["dim"] = file.dim;
  if (!file.labels.empty()) doc["labels"] = file.labels;
  json brackets = json::array();
  for (const auto& entry : file.brackets) {
    json coeffs = json::object();
    for (const auto& [k, c] : entry.coeffs) coeffs[std::to_string(k)] = to_string(c);
    brackets.push_back({{"i", entry.i}, {"j", entry.j}, {"coeffs", coeffs}});
  }
  doc["brackets"] = brackets;
  if (file.form) doc["form"] = matrix_json(*file.form);
  if (file.omega) doc["omega"] = matrix_json(*file.omega);
  return doc.dump(2) + "\n";
}

AlgebraFile to_algebra_file(const LieAlgebra& g, const std::optional<BilinearForm>& form,
                            const std::optional<BilinearForm>& omega) {
  AlgebraFile file;
  file.dim = g.dim();
  file.labels = g.labels();
  file.brackets = g.bracket_table();
  if (form) file.form = form->gram();
  if (omega) file.omega = omega->gram();
  return file;
}

LieAlgebra to_lie_algebra(const AlgebraFile& file) {
  return build_lie_algebra(file.dim, file.labels, file.brackets);
}

}  // namespace liecohom::cli
