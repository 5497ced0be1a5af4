#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "contactlie/algebra.hpp"

namespace contactlie {

/// One structure constant: [lhs, rhs] has `coefficient` on `result`.
/// A vanishing bracket is recorded as result "0" with coefficient "0".
struct TableRow {
  std::string lhs, rhs, result, coefficient;
  auto operator<=>(const TableRow&) const = default;
};

/// All ordered pairs from the window, sorted by (lhs, rhs, result) text.
std::vector<TableRow> structure_table(const ConfigPtr& config, const std::vector<BasisIndex>& window);

/// Header "lhs_index,rhs_index,result_term_index,coefficient"; every field quoted.
void write_csv(std::ostream& out, const std::vector<TableRow>& rows);

/// One basis literal per line; blank lines and '#' comments skipped.
std::vector<BasisIndex> parse_window(const ConfigPtr& config, std::string_view text);

}  // namespace contactlie
