#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <map>
#include <tuple>
#include <vector>

#include "contactlie/algebra.hpp"

namespace contactlie {

/// Malformed input text. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Configuration files are line oriented, '#' starts a comment:
//
//   ell: 1 0 0 0 0 0
//   j0: zero            (or: naturals)
//   gamma: 1 0 0        (one generator per line, serialized slot order)
//
// Structural violations surface as ConfigError, syntax problems as ParseError.
ConfigPtr parse_config_text(std::string_view text);
ConfigPtr parse_config_file(const std::string& path);

/// "x[a_0,a_1,a_1b,...]" optionally followed by "t[i_0,i_1,i_1b,...]".
std::string format_basis(const AlgebraConfig& config, const BasisIndex& index);
BasisIndex parse_basis(const ConfigPtr& config, std::string_view text);

/// "c*x[...]t[...] + c*x[...] - c*x[...]"; the zero element prints as "0".
std::string format_element(const AlgebraElement& element);
AlgebraElement parse_element(const ConfigPtr& config, std::string_view text);

/// Comma-separated rationals, e.g. "1,-1/2,0".
Vector parse_rational_list(std::string_view text);

std::string read_file(const std::string& path);

/// Lines "<literal> <rational>": the value of a functional on one monomial.
/// The literal may carry a coefficient, which scales the value.
std::map<BasisIndex, Rational> parse_functional_text(const ConfigPtr& config, std::string_view text);

/// Lines "<lhs literal> <rhs literal> <rational>".
std::vector<std::tuple<BasisIndex, BasisIndex, Rational>> parse_pair_table_text(const ConfigPtr& config,
                                                                                std::string_view text);

}  // namespace contactlie
