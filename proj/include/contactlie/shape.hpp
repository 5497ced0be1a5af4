#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace contactlie {

/// Position in hat-J = {0} ∪ J. Unbarred indices are 1..n, barred ones n+1..2n,
/// where n = iota_6; bar(p) shifts by n.
using Index = int;

/// Raised when a configuration violates one of the structural constraints.
/// `constraint()` is a stable machine-readable name (e.g. "gamma-support").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string constraint, const std::string& message)
      : std::runtime_error(constraint + ": " + message), constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// The six block sizes and everything derived from them: cumulative sums,
/// blocks I_1..I_6, the bar involution and the serialization order.
class Shape {
 public:
  explicit Shape(std::array<int, 6> ell);

  const std::array<int, 6>& ell() const noexcept { return ell_; }
  int ell(int block) const { return ell_.at(block - 1); }
  int iota(int i) const { return iota_.at(i); }

  /// n = iota_6.
  int rank() const noexcept { return iota_[6]; }
  /// 1 + 2n, the length of every group / exponent vector.
  int dim() const noexcept { return 1 + 2 * rank(); }

  Index bar(Index p) const;
  bool is_barred(Index p) const noexcept { return p > rank(); }
  /// Block number 1..6 of p (or of bar(p) when p is barred); 0 for p = 0.
  int block(Index p) const;

  /// p is unbarred and lies in I_lo ∪ ... ∪ I_hi.
  bool in_blocks(Index p, int lo, int hi) const;
  /// p is barred and bar(p) lies in I_lo ∪ ... ∪ I_hi.
  bool in_bar_blocks(Index p, int lo, int hi) const;
  /// The unbarred indices of I_lo ∪ ... ∪ I_hi in increasing order.
  std::vector<Index> blocks(int lo, int hi) const;

  /// Coordinates where group vectors must vanish: I_6 ∪ bar I_{4,6}.
  bool group_vanishes(Index p) const;
  /// Nonzero-index exponent slots forced to zero: I_{1,2} ∪ I_4 ∪ bar I_1.
  bool exponent_forbidden(Index p) const;
  /// Slots contributing the group part of theta: J_{1,3} ∪ I_{4,5}.
  bool theta_group_slot(Index p) const;
  /// Slots contributing the exponent part of theta: I_6 ∪ bar I_{4,6}.
  bool theta_exponent_slot(Index p) const { return group_vanishes(p); }

  /// Serialized position of p in the order (0, 1, 1b, 2, 2b, ...).
  int slot(Index p) const;
  Index index_at_slot(int s) const;

  /// "0", "3" or "3b".
  std::string name(Index p) const;
  Index parse_index(std::string_view text) const;

  bool operator==(const Shape& other) const noexcept { return ell_ == other.ell_; }

 private:
  void check(Index p) const;

  std::array<int, 6> ell_;
  std::array<int, 7> iota_{};
};

}  // namespace contactlie
