#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "contactlie/algebra.hpp"

namespace contactlie {

/// Linear functional on the algebra, given on basis monomials.
class LinearFunctional {
 public:
  using Rule = std::function<Rational(const BasisIndex&)>;

  LinearFunctional(ConfigPtr config, Rule rule, std::string tag)
      : config_(std::move(config)), rule_(std::move(rule)), tag_(std::move(tag)) {}

  /// Finitely supported functional, zero off the map.
  static LinearFunctional from_map(ConfigPtr config, std::map<BasisIndex, Rational> values);
  static LinearFunctional zero(ConfigPtr config);

  const ConfigPtr& config() const noexcept { return config_; }
  const std::string& tag() const noexcept { return tag_; }

  Rational operator()(const BasisIndex& b) const { return rule_(b); }
  Rational operator()(const AlgebraElement& u) const;

  /// Nonzero values on the given labels.
  std::map<BasisIndex, Rational> restrict_to(const std::vector<BasisIndex>& labels) const;

 private:
  ConfigPtr config_;
  Rule rule_;
  std::string tag_;
};

/// Skew bilinear form on the algebra, given on ordered pairs of basis monomials.
class Cocycle {
 public:
  using Rule = std::function<Rational(const BasisIndex&, const BasisIndex&)>;

  Cocycle(ConfigPtr config, Rule rule, std::string tag)
      : config_(std::move(config)), rule_(std::move(rule)), tag_(std::move(tag)) {}

  /// Finite table, zero off the table. Only one orientation of each pair is
  /// stored and the other is its negative; contradictory or diagonal entries
  /// throw std::invalid_argument.
  static Cocycle from_table(ConfigPtr config,
                            const std::vector<std::tuple<BasisIndex, BasisIndex, Rational>>& entries);
  static Cocycle zero(ConfigPtr config);

  const ConfigPtr& config() const noexcept { return config_; }
  const std::string& tag() const noexcept { return tag_; }

  Rational operator()(const BasisIndex& a, const BasisIndex& b) const { return rule_(a, b); }
  Rational operator()(const AlgebraElement& u, const AlgebraElement& v) const;

  /// The functional f when this cocycle was built as coboundary(f), else null.
  const LinearFunctional* potential() const noexcept { return potential_.get(); }

  friend Cocycle operator-(const Cocycle& a, const Cocycle& b);
  friend Cocycle coboundary(const LinearFunctional& f);

 private:
  ConfigPtr config_;
  Rule rule_;
  std::string tag_;
  std::shared_ptr<const LinearFunctional> potential_;
};

/// psi_f(u, v) = f([u, v]).
Cocycle coboundary(const LinearFunctional& f);

struct CocycleFailure {
  std::vector<BasisIndex> at;  // the pair or triple
  Rational value;              // psi(u,v)+psi(v,u), or the cyclic Jacobi sum
};

struct CocycleReport {
  std::size_t pairs_checked = 0, skew_failed = 0;
  std::size_t triples_checked = 0, jacobi_failed = 0;
  std::vector<CocycleFailure> failures;  // first few of each kind
  bool ok() const noexcept { return skew_failed == 0 && jacobi_failed == 0; }
};

/// Exact skew-symmetry on pairs and the cyclic identity
/// psi([u,v],w) + psi([v,w],u) + psi([w,u],v) = 0 on triples.
CocycleReport check_cocycle(const Cocycle& psi,
                            const std::vector<std::pair<BasisIndex, BasisIndex>>& pairs,
                            const std::vector<std::tuple<BasisIndex, BasisIndex, BasisIndex>>& triples,
                            const BracketFn& bracket = bracket_closed);

class TrivializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest p in I_1 with (alpha_p, alpha_bar p) != (-1, -1). Throws
/// TrivializationError when there is none (alpha = sigma).
Index p_alpha(const AlgebraConfig& config, const GroupElement& alpha);

/// J0 = N, or some block other than I_1 is nonempty.
bool case_a_applies(const AlgebraConfig& config);

/// First available pivot among I_2, I_3, I_5, then 0 (the unit element) when
/// J0 = N. Throws TrivializationError when none exists.
Index default_case_a_pivot(const AlgebraConfig& config);

/// Only p in I_2 follows the worked recursion; the I_3, I_5 and unit pivots
/// are analogs built from the matching bracket formulas.
bool pivot_is_analog(const AlgebraConfig& config, Index pivot);

/// Recursive trivializer using ad of x^{-sigma_p} (p in I_2 or I_3),
/// x^{-sigma_q} t_{bar q} (q in I_5), or 1 (pivot 0, J0 = N). Memoized and
/// thread safe.
LinearFunctional trivialize_case_A(const Cocycle& psi, Index pivot);

/// Closed-form trivializer for J0 = {0} and iota_6 = ell_1.
LinearFunctional trivialize_case_B(const Cocycle& psi);

enum class TrivializerCase { kA, kB };

struct Trivialization {
  LinearFunctional f;
  TrivializerCase kind;
  Index pivot;  // case A only; 0 means the unit element
  bool derived_by_analogy;
};

/// Chooses case A when it applies, case B otherwise.
Trivialization trivialize(const Cocycle& psi);

struct TrivializationFailure {
  BasisIndex u, v;
  Rational psi_value, f_value;  // psi(u,v) and f([u,v])
};

struct TrivializationReport {
  std::size_t checked = 0, failed = 0;
  std::vector<TrivializationFailure> failures;
  bool ok() const noexcept { return failed == 0; }
};

/// Exact comparison of psi(u,v) with f([u,v]) on every pair. Each bracket is
/// computed once when psi carries its potential.
TrivializationReport verify_trivialization(const Cocycle& psi, const LinearFunctional& f,
                                           const std::vector<std::pair<BasisIndex, BasisIndex>>& pairs);

}  // namespace contactlie
