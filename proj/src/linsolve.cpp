#include "contactlie/linsolve.hpp"

#include <stdexcept>

namespace contactlie {

namespace {

// a - f*b for sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add(SparseRow row, std::size_t source) {
  std::vector<std::pair<std::size_t, Rational>> history;
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    if (lead >= columns_) throw std::out_of_range("column out of range");
    const std::size_t pid = pivot_of_column_[lead];
    if (pid == npos) break;
    const Rational f = row.front().second;
    history.emplace_back(pid, f);
    row = axpy(row, f, pivots_[pid].row);
  }
  if (row.empty()) return false;

  const std::size_t lead = row.front().first;
  Rational scale = row.front().second;
  for (auto& [c, v] : row) v /= scale;
  pivot_of_column_[lead] = pivots_.size();
  pivots_.push_back(Pivot{lead, std::move(row), source, std::move(history), std::move(scale)});
  return true;
}

std::vector<std::size_t> SparseEchelon::pivot_sources() const {
  std::vector<std::size_t> out;
  out.reserve(pivots_.size());
  for (const auto& p : pivots_) out.push_back(p.source);
  return out;
}

std::vector<Rational> SparseEchelon::solve(const std::function<Rational(std::size_t)>& rhs) const {
  if (!full_rank()) throw std::logic_error("SparseEchelon::solve requires full rank");
  std::vector<Rational> reduced(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Rational r = rhs(pivots_[k].source);
    for (const auto& [pid, f] : pivots_[k].history) r -= f * reduced[pid];
    reduced[k] = r / pivots_[k].scale;
  }
  std::vector<Rational> x(columns_);
  for (std::size_t col = columns_; col-- > 0;) {
    const Pivot& p = pivots_[pivot_of_column_[col]];
    Rational v = reduced[pivot_of_column_[col]];
    for (std::size_t t = 1; t < p.row.size(); ++t) v -= p.row[t].second * x[p.row[t].first];
    x[col] = std::move(v);
  }
  return x;
}

std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational lead = rows[r][c];
    for (auto& v : rows[r]) v /= lead;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Rational f = rows[k][c];
      for (std::size_t j = 0; j < columns; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t columns) {
  std::vector<Vector> m = rows;
  const auto pivots = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector v(columns);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace contactlie
