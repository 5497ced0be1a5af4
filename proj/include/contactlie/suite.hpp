#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "contactlie/algebra.hpp"

namespace contactlie {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t pairs = 300;
  std::size_t triples = 100;
  std::size_t functionals = 3;  // random g for the round-trip, random mu for d_mu
  BracketFn bracket = bracket_closed;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool skipped = false;
  std::string note;     // skip reason or extra detail
  std::string witness;  // first failure, as literals
};

struct SuiteReport {
  std::vector<PropertyResult> properties;
  double seconds = 0;  // not part of render_report
  bool ok() const;
};

SuiteReport run_suite(const ConfigPtr& config, const SuiteOptions& options);

/// Deterministic text rendering; excludes timing.
std::string render_report(const ConfigPtr& config, const SuiteOptions& options, const SuiteReport& report);

/// Bracket with the constant 2 in the 0-direction terms replaced by 3.
/// Antisymmetric but not a Lie bracket.
BracketFn corrupted_bracket(const ConfigPtr& config);

/// [t^{1_r+1_rbar}, x] = (i_rbar - i_r) x and [t^{2_rbar}, [t^{2_r}, x]] = -4 (i_r+1) i_rbar x
/// for every r in I_6 and every label; returns the number of failures and the first witness.
PropertyResult check_eigen_relations(const ConfigPtr& config, const std::vector<BasisIndex>& labels);

}  // namespace contactlie
