#include "contactlie/table.hpp"

#include <algorithm>
#include <sstream>

#include "contactlie/io.hpp"

namespace contactlie {

std::vector<TableRow> structure_table(const ConfigPtr& config, const std::vector<BasisIndex>& window) {
  std::vector<std::string> names;
  names.reserve(window.size());
  for (const auto& b : window) names.push_back(format_basis(*config, b));

  std::vector<TableRow> rows;
  for (std::size_t a = 0; a < window.size(); ++a) {
    for (std::size_t b = 0; b < window.size(); ++b) {
      AlgebraElement out(config);
      bracket_basis(*config, window[a], window[b], 1, out);
      if (out.is_zero()) {
        rows.push_back({names[a], names[b], "0", "0"});
        continue;
      }
      for (const auto& [label, c] : out.terms())
        rows.push_back({names[a], names[b], format_basis(*config, label), format_rational(c)});
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

void write_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "lhs_index,rhs_index,result_term_index,coefficient\n";
  for (const auto& r : rows)
    out << '"' << r.lhs << "\",\"" << r.rhs << "\",\"" << r.result << "\",\"" << r.coefficient << "\"\n";
}

std::vector<BasisIndex> parse_window(const ConfigPtr& config, std::string_view text) {
  std::vector<BasisIndex> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_basis(config, line));
    } catch (const ParseError& e) {
      throw ParseError(number, e.what());
    }
  }
  return out;
}

}  // namespace contactlie
