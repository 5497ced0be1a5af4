#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace contactlie {

/// Arbitrary-precision exact rational; every coefficient in the library is one of these.
using Rational = mpq_class;

/// Dense rational vector indexed by hat-J position (0, 1..n, n+1..2n).
using Vector = std::vector<Rational>;

/// Parses "p/q", "-p/q" or an integer. Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" with q > 1, or "p".
std::string format_rational(const Rational& value);

/// True when the value is an integer that fits in int64_t.
bool to_int64(const Rational& value, std::int64_t& out);

}  // namespace contactlie
