#include "contactlie/shape.hpp"

#include <charconv>

namespace contactlie {

Shape::Shape(std::array<int, 6> ell) : ell_(ell) {
  int total = 0;
  for (int i = 0; i < 6; ++i) {
    if (ell_[i] < 0) throw ConfigError("ell", "block sizes must be nonnegative");
    total += ell_[i];
    iota_[i + 1] = total;
  }
  if (total == 0) throw ConfigError("ell", "block sizes must not all be zero");
}

void Shape::check(Index p) const {
  if (p < 0 || p > 2 * rank())
    throw std::out_of_range("index " + std::to_string(p) + " outside 0.." + std::to_string(2 * rank()));
}

Index Shape::bar(Index p) const {
  check(p);
  if (p == 0) throw std::out_of_range("bar is not defined on index 0");
  return p <= rank() ? p + rank() : p - rank();
}

int Shape::block(Index p) const {
  check(p);
  if (p == 0) return 0;
  const Index q = is_barred(p) ? p - rank() : p;
  for (int i = 1; i <= 6; ++i)
    if (q <= iota_[i]) return i;
  return 6;  // unreachable
}

bool Shape::in_blocks(Index p, int lo, int hi) const {
  if (p == 0 || is_barred(p)) return false;
  const int b = block(p);
  return lo <= b && b <= hi;
}

bool Shape::in_bar_blocks(Index p, int lo, int hi) const {
  if (p == 0 || !is_barred(p)) return false;
  const int b = block(p);
  return lo <= b && b <= hi;
}

std::vector<Index> Shape::blocks(int lo, int hi) const {
  std::vector<Index> out;
  for (Index p = iota_[lo - 1] + 1; p <= iota_[hi]; ++p) out.push_back(p);
  return out;
}

bool Shape::group_vanishes(Index p) const {
  return in_blocks(p, 6, 6) || in_bar_blocks(p, 4, 6);
}

bool Shape::exponent_forbidden(Index p) const {
  return in_blocks(p, 1, 2) || in_blocks(p, 4, 4) || in_bar_blocks(p, 1, 1);
}

bool Shape::theta_group_slot(Index p) const {
  return in_blocks(p, 1, 5) || in_bar_blocks(p, 1, 3);
}

int Shape::slot(Index p) const {
  check(p);
  if (p == 0) return 0;
  return is_barred(p) ? 2 * (p - rank()) : 2 * p - 1;
}

Index Shape::index_at_slot(int s) const {
  if (s < 0 || s >= dim()) throw std::out_of_range("slot out of range");
  if (s == 0) return 0;
  return s % 2 == 1 ? (s + 1) / 2 : s / 2 + rank();
}

std::string Shape::name(Index p) const {
  check(p);
  if (p == 0) return "0";
  return is_barred(p) ? std::to_string(p - rank()) + "b" : std::to_string(p);
}

Index Shape::parse_index(std::string_view text) const {
  bool barred = false;
  if (!text.empty() && text.back() == 'b') {
    barred = true;
    text.remove_suffix(1);
  }
  int value = -1;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0 || value > rank() ||
      (barred && value == 0))
    throw std::invalid_argument("bad index '" + std::string(text) + (barred ? "b'" : "'"));
  return barred ? value + rank() : value;
}

}  // namespace contactlie
