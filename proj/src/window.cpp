#include "contactlie/window.hpp"

#include <algorithm>
#include <cstdlib>

namespace contactlie {

std::vector<BasisIndex> enumerate_window(const AlgebraConfig& config, int radius) {
  if (radius < 0) throw std::invalid_argument("window radius must be nonnegative");
  const std::size_t g = config.gamma().rank();
  std::vector<Index> exp_slots;
  for (Index p = 0; p < config.dim(); ++p)
    if (config.exponent_allowed(p)) exp_slots.push_back(p);

  std::vector<BasisIndex> out;
  Coords coords(g, -radius);
  while (true) {
    const GroupElement alpha = config.gamma().element(coords);
    ExponentVector exps = config.zero_exponents();
    while (true) {
      out.push_back(BasisIndex{alpha, exps});
      std::size_t k = exp_slots.size();
      while (k > 0) {
        const Index p = exp_slots[k - 1];
        if (exps[p] < radius) {
          ++exps[p];
          break;
        }
        exps[p] = 0;
        --k;
      }
      if (k == 0) break;
    }
    std::size_t k = g;
    while (k > 0) {
      if (coords[k - 1] < radius) {
        ++coords[k - 1];
        break;
      }
      coords[k - 1] = -radius;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

namespace {

std::int64_t size_of(const BasisIndex& b) {
  std::int64_t s = 0;
  for (auto c : b.alpha.coords()) s += std::llabs(c);
  for (auto e : b.exps.entries()) s += e;
  return s;
}

}  // namespace

std::vector<BasisIndex> enumerate_window_by_size(const AlgebraConfig& config, int radius) {
  auto out = enumerate_window(config, radius);
  std::stable_sort(out.begin(), out.end(),
                   [](const BasisIndex& a, const BasisIndex& b) { return size_of(a) < size_of(b); });
  return out;
}

std::int64_t radius_of(const BasisIndex& index) {
  std::int64_t r = 0;
  for (auto c : index.alpha.coords()) r = std::max<std::int64_t>(r, std::llabs(c));
  for (auto e : index.exps.entries()) r = std::max(r, e);
  return r;
}

Sampler::Sampler(ConfigPtr config, std::uint64_t seed, int coord_box, int exp_max)
    : config_(std::move(config)), rng_(seed), coord_box_(coord_box), exp_max_(exp_max) {}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

BasisIndex Sampler::basis() {
  Coords coords(config_->gamma().rank());
  for (auto& c : coords) c = integer(-coord_box_, coord_box_);
  ExponentVector exps = config_->zero_exponents();
  for (Index p = 0; p < config_->dim(); ++p)
    if (config_->exponent_allowed(p)) exps[p] = integer(0, exp_max_);
  return BasisIndex{config_->gamma().element(std::move(coords)), std::move(exps)};
}

Rational Sampler::rational(int num_box, int den_max) {
  Rational r(static_cast<long>(integer(-num_box, num_box)), static_cast<unsigned long>(integer(1, den_max)));
  r.canonicalize();
  return r;
}

AlgebraElement Sampler::element(int max_terms) {
  AlgebraElement out(config_);
  const auto n = integer(1, std::max(1, max_terms));
  for (std::int64_t k = 0; k < n; ++k) {
    Rational c = rational();
    if (c == 0) c = 1;
    out.add_term(basis(), c);
  }
  return out;
}

}  // namespace contactlie
