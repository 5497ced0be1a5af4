#include <gtest/gtest.h>

#include <random>

#include "contactlie/linsolve.hpp"

using namespace contactlie;

namespace {

Rational dot(const Vector& a, const Vector& b) {
  Rational s;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Plain Gauss-Jordan on a square system; the reference answer.
Vector dense_solve(std::vector<Vector> m, Vector rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] /= m[r][r];
  return rhs;
}

}  // namespace

TEST(SparseEchelon, MatchesDenseSolveAndIgnoresDependentRows) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6;
    std::vector<Vector> rows;
    std::vector<Vector> square;
    SparseEchelon ech(n);
    std::size_t source = 0;
    std::vector<Rational> rhs_of;
    const Vector truth = [&] {
      Vector t(n);
      for (auto& x : t) {
        x = Rational(d(rng), 1 + (d(rng) + 3) % 3);
        x.canonicalize();
      }
      return t;
    }();
    while (!ech.full_rank()) {
      Vector r(n);
      for (auto& x : r) x = d(rng);
      SparseRow sparse;
      for (std::size_t k = 0; k < n; ++k)
        if (r[k] != 0) sparse.emplace_back(k, r[k]);
      rhs_of.push_back(dot(r, truth));
      if (ech.add(sparse, source)) square.push_back(r);
      ++source;
      // Feed an explicit duplicate; it must be rejected.
      if (!square.empty()) {
        SparseRow dup;
        for (std::size_t k = 0; k < n; ++k)
          if (square.back()[k] != 0) dup.emplace_back(k, Rational(2) * square.back()[k]);
        rhs_of.push_back(Rational(2) * dot(square.back(), truth));
        EXPECT_FALSE(ech.add(dup, source++));
      }
    }
    const auto x = ech.solve([&](std::size_t s) { return rhs_of[s]; });
    EXPECT_EQ(x, truth);
    Vector rhs;
    for (const auto& r : square) rhs.push_back(dot(r, truth));
    EXPECT_EQ(dense_solve(square, rhs), truth);
    EXPECT_EQ(ech.pivot_sources().size(), n);
  }
}

TEST(Nullspace, BasisIsAnnihilatedAndComplete) {
  std::vector<Vector> m = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  auto ns = nullspace(m, 4);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns)
    for (const auto& r : m) EXPECT_EQ(dot(r, v), 0);
  auto copy = ns;
  EXPECT_EQ(rref(copy, 4).size(), 2u);
  EXPECT_EQ(nullspace({}, 3).size(), 3u);
}

TEST(Rref, PivotColumns) {
  std::vector<Vector> m = {{0, 2, 4}, {0, 1, 3}};
  EXPECT_EQ(rref(m, 3), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(m[0], (Vector{0, 1, 0}));
}
