#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactlie/algebra.hpp"
#include "contactlie/linsolve.hpp"

namespace contactlie {

/// Linear map on the algebra, given by its values on basis monomials.
class LinearOperator {
 public:
  using Rule = std::function<AlgebraElement(const BasisIndex&)>;

  LinearOperator(ConfigPtr config, Rule rule, std::string tag)
      : config_(std::move(config)), rule_(std::move(rule)), tag_(std::move(tag)) {}

  const ConfigPtr& config() const noexcept { return config_; }
  const std::string& tag() const noexcept { return tag_; }

  AlgebraElement operator()(const BasisIndex& b) const { return rule_(b); }
  AlgebraElement operator()(const AlgebraElement& u) const;

  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator*(const Rational& s, const LinearOperator& a);

 private:
  ConfigPtr config_;
  Rule rule_;
  std::string tag_;
};

LinearOperator zero_operator(ConfigPtr config);

/// A homomorphism Gamma -> Q, stored as its values on the lattice generators.
/// Construction enforces mu(sigma_p) = 0 for every p in I_{1,5}.
class HomGamma {
 public:
  HomGamma(ConfigPtr config, Vector values);
  static HomGamma zero(ConfigPtr config);

  const ConfigPtr& config() const noexcept { return config_; }
  const Vector& values() const noexcept { return values_; }
  Rational operator()(const GroupElement& alpha) const;
  bool operator==(const HomGamma& other) const { return values_ == other.values_; }

 private:
  ConfigPtr config_;
  Vector values_;
};

/// Values on the generators of alpha -> alpha_{bar p} - alpha_p (p in I_{1,3}),
/// or of alpha -> alpha_0 for p = 0.
Vector hom_mu_values(const AlgebraConfig& config, Index p);

/// Basis (generator-value form) of the homomorphisms vanishing on every sigma_p, p in I_{1,5}.
std::vector<Vector> hom_prime_basis(const AlgebraConfig& config);

/// Basis (generator-value form) of the complement of span{mu_p : p in hat I_{1,3}}
/// inside the sigma-vanishing homomorphisms, fixed by RREF pivoting: coordinates at
/// the pivot columns of the mu_p span are forced to zero.
std::vector<Vector> hom_star_basis(const AlgebraConfig& config);

LinearOperator ad(const AlgebraElement& u);
LinearOperator d_mu(const HomGamma& mu);
/// partial_t for p in bar I_2 ∪ J_3 ∪ I_5; other p are rejected.
LinearOperator outer_partial_t(ConfigPtr config, Index p);
/// The bare grading operator partial_star_p; not a derivation in general.
LinearOperator grading_operator(ConfigPtr config, Index p);

/// Indices p admitted by outer_partial_t, in increasing order.
std::vector<Index> outer_indices(const AlgebraConfig& config);

struct DerivationFailure {
  BasisIndex u, v;
  AlgebraElement lhs, rhs;  // D([u,v]) and [D u, v] + [u, D v]
};

struct DerivationReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<DerivationFailure> failures;  // first few only
  bool ok() const noexcept { return failed == 0; }
};

/// Exact Leibniz check on every pair.
DerivationReport check_derivation(const LinearOperator& d,
                                  const std::vector<std::pair<BasisIndex, BasisIndex>>& pairs,
                                  const BracketFn& bracket = bracket_closed);

struct IdentityFailure {
  BasisIndex at;
  AlgebraElement lhs, rhs;
};

struct IdentityReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<IdentityFailure> failures;
  bool ok() const noexcept { return failed == 0; }
};

/// d_{mu_p} = ad x^{-sigma_p} + partial_t(p) - partial_t(bar p) on every window element, p in I_{1,3}.
IdentityReport check_sigma_identity(ConfigPtr config, Index p, const std::vector<BasisIndex>& window);

struct ProbeSets {
  std::vector<AlgebraElement> a1, a2, a3, a4;
};

/// Ad-locally-finite (a1), ad-semisimple (a2) and the two families of square
/// monomials (a3, a4) used to pin down a derivation.
ProbeSets probe_sets(const ConfigPtr& config);

struct DerivationDecomposition {
  std::map<Index, Rational> c;  // coefficients of partial_t(p), p in outer_indices
  HomGamma mu;                  // component in the fixed complement
  AlgebraElement inner;         // w with inner part ad w
  bool residual_zero = false;

  LinearOperator reconstruct() const;
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operator disagrees with every combination on some window element.
class ResidualError : public DecompositionError {
 public:
  ResidualError(std::string witness, std::string message)
      : DecompositionError(message), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// The window does not pin down all coefficients.
class AmbiguousError : public DecompositionError {
 public:
  AmbiguousError(std::size_t rank, std::size_t unknowns)
      : DecompositionError("window determines only " + std::to_string(rank) + " of " +
                           std::to_string(unknowns) + " coefficients; enlarge the window"),
        rank_(rank),
        unknowns_(unknowns) {}
  std::size_t rank() const noexcept { return rank_; }
  std::size_t unknowns() const noexcept { return unknowns_; }

 private:
  std::size_t rank_, unknowns_;
};

/// Splits a derivation into outer partial_t terms, a d_mu with mu in the fixed
/// complement, and an inner part ad w with w supported on `inner_support`,
/// matching the operator exactly on every window element.
///
/// The factorization depends only on (config, window, support), so one
/// decomposer can be reused for many operators.
class DerivationDecomposer {
 public:
  /// Throws AmbiguousError when the window is too small.
  DerivationDecomposer(ConfigPtr config, std::vector<BasisIndex> window, std::vector<BasisIndex> inner_support);

  /// Throws ResidualError (with a window witness) when no combination matches.
  DerivationDecomposition decompose(const LinearOperator& d) const;

  std::size_t unknowns() const noexcept { return columns_; }
  /// Window elements consumed before the system became determined.
  std::size_t probes_used() const noexcept { return probes_used_; }

 private:
  ConfigPtr config_;
  std::vector<BasisIndex> window_;   // sorted by size
  std::vector<BasisIndex> support_;
  std::vector<Index> outer_;
  std::vector<Vector> hom_basis_;
  std::size_t columns_ = 0;
  std::size_t probes_used_ = 0;
  SparseEchelon echelon_{0};
  std::vector<std::pair<std::size_t, BasisIndex>> equations_;  // (window position, output label)
};

DerivationDecomposition decompose_derivation(const LinearOperator& d, std::vector<BasisIndex> window,
                                             std::vector<BasisIndex> inner_support);

/// Operator mini-language: '+'/'-' separated terms "[q*]atom" with atoms
/// "ad(<element>)", "dmu(<rationals per generator>)", "dt(<index>)" and
/// "dstar(<index>)". Indices are written "3" or "3b".
LinearOperator parse_operator_spec(const ConfigPtr& config, const std::string& text);

}  // namespace contactlie
