#pragma once

#include <string>
#include <vector>

#include "contactlie/io.hpp"
#include "contactlie/window.hpp"

namespace testing_helpers {

using namespace contactlie;

inline ConfigPtr config(const std::string& text) { return parse_config_text(text); }

// ell = e_block, gamma spanned by the unit vectors of every non-vanishing slot.
inline ConfigPtr single_block(int block, J0Mode j0, bool with_zero_unit = true) {
  std::array<int, 6> ell{};
  ell[static_cast<std::size_t>(block - 1)] = 1;
  Shape s(ell);
  std::vector<Vector> gens;
  for (Index p = 0; p < s.dim(); ++p) {
    if (s.group_vanishes(p) || (p == 0 && !with_zero_unit)) continue;
    gens.push_back(unit_vector(s, p));
  }
  return AlgebraConfig::create(s, gens, j0);
}

// A spread of shapes and both J0 modes, including non-unit generators.
inline std::vector<std::string> standard_config_texts() {
  return {
      "ell: 1 0 0 0 0 0\nj0: naturals\ngamma: 1 0 0\ngamma: 0 1 0\ngamma: 0 0 1\n",
      "ell: 0 1 0 0 0 0\nj0: naturals\ngamma: 1 0 0\ngamma: 0 1 0\ngamma: 0 0 1\n",
      "ell: 0 0 1 0 0 0\nj0: zero\ngamma: 1 0 0\ngamma: 0 1 0\ngamma: 0 0 1\n",
      "ell: 0 0 0 1 0 0\nj0: naturals\ngamma: 1 0 0\ngamma: 0 1 0\n",
      "ell: 0 0 0 0 1 0\nj0: naturals\ngamma: 1 0 0\ngamma: 0 1 0\n",
      "ell: 0 0 0 0 0 1\nj0: naturals\ngamma: 1 0 0\n",
      "ell: 2 0 0 0 0 0\nj0: zero\ngamma: 1/2 0 0 0 0\ngamma: 0 1 0 0 0\ngamma: 0 0 1 0 0\n"
      "gamma: 0 0 0 1 0\ngamma: 0 0 0 0 1\n",
      "ell: 0 1 0 0 0 1\nj0: zero\ngamma: 1/2 0 0 0 0\ngamma: 0 1 0 0 0\ngamma: 0 0 1 0 0\n",
      "ell: 1 1 1 1 1 1\nj0: naturals\n"
      "gamma: 1 0 0 0 0 0 0 0 0 0 0 0 0\ngamma: 0 1 0 0 0 0 0 0 0 0 0 0 0\n"
      "gamma: 0 0 1 0 0 0 0 0 0 0 0 0 0\ngamma: 0 0 0 1 0 0 0 0 0 0 0 0 0\n"
      "gamma: 0 0 0 0 1 0 0 0 0 0 0 0 0\ngamma: 0 0 0 0 0 1 0 0 0 0 0 0 0\n"
      "gamma: 0 0 0 0 0 0 1 0 0 0 0 0 0\ngamma: 0 0 0 0 0 0 0 1 0 0 0 0 0\n"
      "gamma: 0 0 0 0 0 0 0 0 0 1 0 0 0\n",
  };
}

inline AlgebraElement el(const ConfigPtr& c, const std::string& text) { return parse_element(c, text); }
inline BasisIndex bi(const ConfigPtr& c, const std::string& text) { return parse_basis(c, text); }

inline std::vector<std::pair<BasisIndex, BasisIndex>> random_pairs(const ConfigPtr& c, std::uint64_t seed,
                                                                   std::size_t n) {
  Sampler s(c, seed);
  std::vector<std::pair<BasisIndex, BasisIndex>> out;
  for (std::size_t k = 0; k < n; ++k) {
    BasisIndex a = s.basis();
    out.emplace_back(std::move(a), s.basis());
  }
  return out;
}

}  // namespace testing_helpers
