#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "contactlie/algebra.hpp"

namespace contactlie {

/// Every basis label with generator coordinates in [-r, r] and admissible
/// exponent entries in [0, r], in lexicographic order.
std::vector<BasisIndex> enumerate_window(const AlgebraConfig& config, int radius);

/// Window sorted by (sum |coords| + sum exps), then lexicographically.
std::vector<BasisIndex> enumerate_window_by_size(const AlgebraConfig& config, int radius);

/// max(max |coord|, max exponent); the smallest radius whose window contains the label.
std::int64_t radius_of(const BasisIndex& index);

/// Seeded generator of random basis labels and elements. Coordinates are drawn
/// uniformly from [-coord_box, coord_box], admissible exponents from [0, exp_max].
class Sampler {
 public:
  Sampler(ConfigPtr config, std::uint64_t seed, int coord_box = 3, int exp_max = 4);

  BasisIndex basis();
  AlgebraElement element(int max_terms);
  Rational rational(int num_box = 5, int den_max = 3);
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  std::mt19937_64& engine() noexcept { return rng_; }
  const ConfigPtr& config() const noexcept { return config_; }

 private:
  ConfigPtr config_;
  std::mt19937_64 rng_;
  int coord_box_;
  int exp_max_;
};

}  // namespace contactlie
