#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "contactlie/rational.hpp"

namespace contactlie {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental exact row echelon form over Q.
///
/// Rows are fed one at a time and reduced against the pivots found so far; a
/// row that survives becomes a new pivot. The elimination history is kept so
/// that right-hand sides can be supplied afterwards: solve() replays the same
/// row operations on any vector of right-hand sides, which lets one
/// factorization serve many systems with the same matrix.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t columns) : columns_(columns), pivot_of_column_(columns, npos) {}

  /// Returns true if the row was independent of the existing pivots. `source`
  /// is an opaque tag identifying the equation; solve() asks for its rhs.
  bool add(SparseRow row, std::size_t source);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool full_rank() const noexcept { return rank() == columns_; }

  /// Sources of the rows that became pivots, in creation order.
  std::vector<std::size_t> pivot_sources() const;

  /// Unique solution of the pivot subsystem; requires full_rank().
  std::vector<Rational> solve(const std::function<Rational(std::size_t source)>& rhs) const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Pivot {
    std::size_t lead;
    SparseRow row;  // normalized: row[0] = (lead, 1)
    std::size_t source;
    std::vector<std::pair<std::size_t, Rational>> history;  // (earlier pivot, factor subtracted)
    Rational scale;  // value at lead before normalization
  };

  std::size_t columns_;
  std::vector<std::size_t> pivot_of_column_;
  std::vector<Pivot> pivots_;
};

/// Basis of {x : M x = 0} for a dense rational matrix with `columns` columns.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t columns);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t columns);

}  // namespace contactlie
