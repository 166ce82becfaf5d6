#include "liecohom_cli/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "liecohom/errors.hpp"

namespace liecohom::cli {
namespace {

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw BadParameter("unknown output format '" + name + "'");
}

std::vector<std::uint64_t> ResultReport::betti() const {
  std::vector<std::uint64_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

bool ResultReport::consistent() const {
  std::int64_t euler = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    std::uint64_t entering = k == 0 ? 0 : degrees[k - 1].rank;
    if (degrees[k].kernel < entering || degrees[k].betti != degrees[k].kernel - entering) return false;
    if (degrees[k].kernel + degrees[k].rank != degrees[k].cochains) return false;
    euler += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(degrees[k].betti);
  }
  return !complete() || dimension == 0 || euler == 0;
}

std::string format_list(const std::vector<std::uint64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string render(const ResultReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::table: {
      out << report.label << "  dim " << report.dimension << "  method " << report.method << "\n";
      out << pad("k", 4) << pad("dim", 8) << pad("rank", 8) << pad("ker", 8) << pad("b", 8) << "\n";
      for (const auto& d : report.degrees) {
        out << pad(std::to_string(d.k), 4) << pad(std::to_string(d.cochains), 8)
            << pad(std::to_string(d.rank), 8) << pad(std::to_string(d.kernel), 8)
            << pad(std::to_string(d.betti), 8) << "\n";
      }
      out << "betti " << format_list(report.betti()) << "\n";
      out << "time " << seconds_text(report.seconds) << "s\n";
      break;
    }
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["algebra"] = report.label;
      doc["dim"] = report.dimension;
      doc["method"] = report.method;
      doc["complete"] = report.complete();
      auto rows = nlohmann::ordered_json::array();
      for (const auto& d : report.degrees) {
        rows.push_back({{"k", d.k}, {"cochains", d.cochains}, {"rank", d.rank}, {"kernel", d.kernel}, {"betti", d.betti}});
      }
      doc["degrees"] = rows;
      doc["betti"] = report.betti();
      doc["seconds"] = report.seconds;
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "k,cochains,rank,kernel,betti\n";
      for (const auto& d : report.degrees)
        out << d.k << "," << d.cochains << "," << d.rank << "," << d.kernel << "," << d.betti << "\n";
      break;
  }
  return out.str();
}

std::string render(const H2Report& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::table:
      out << report.label << "  dim " << report.dimension << "\n";
      out << "dim Z2 " << report.cocycles << "\n";
      out << "dim B2 " << report.coboundaries << "\n";
      out << "dim H2 " << report.h2 << "\n";
      out << "Z2 basis\n";
      for (const auto& s : report.cocycle_basis) out << "  " << s << "\n";
      out << "B2 basis\n";
      for (const auto& s : report.coboundary_basis) out << "  " << s << "\n";
      out << "time " << seconds_text(report.seconds) << "s\n";
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["algebra"] = report.label;
      doc["dim"] = report.dimension;
      doc["z2"] = report.cocycles;
      doc["b2"] = report.coboundaries;
      doc["h2"] = report.h2;
      doc["z2_basis"] = report.cocycle_basis;
      doc["b2_basis"] = report.coboundary_basis;
      doc["seconds"] = report.seconds;
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "z2,b2,h2\n" << report.cocycles << "," << report.coboundaries << "," << report.h2 << "\n";
      break;
  }
  return out.str();
}

}  // namespace liecohom::cli
