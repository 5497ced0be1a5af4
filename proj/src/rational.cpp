#include "contactlie/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace contactlie {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_natural_literal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_natural_literal(den)))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(1);
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  // mpq get_str already omits a unit denominator for canonical values.
  return value.get_str(10);
}

bool to_int64(const Rational& value, std::int64_t& out) {
  if (value.get_den() != 1) return false;
  const mpz_class& n = value.get_num();
  if (!n.fits_slong_p()) return false;
  static_assert(sizeof(long) == sizeof(std::int64_t));
  out = n.get_si();
  return true;
}

}  // namespace contactlie
