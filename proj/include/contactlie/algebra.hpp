#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>

#include "contactlie/config.hpp"

namespace contactlie {

/// Label (alpha, i) of the basis monomial x^{alpha,i}.
struct BasisIndex {
  GroupElement alpha;
  ExponentVector exps;

  bool operator==(const BasisIndex& other) const noexcept {
    return alpha == other.alpha && exps == other.exps;
  }
  std::strong_ordering operator<=>(const BasisIndex& other) const noexcept {
    if (auto c = alpha <=> other.alpha; c != 0) return c;
    return exps <=> other.exps;
  }
};

struct BasisIndexHash {
  std::size_t operator()(const BasisIndex& b) const noexcept;
};

/// Finite linear combination of basis monomials with nonzero rational
/// coefficients. Terms whose label falls outside Gamma × J are dropped on
/// insertion, which realizes the convention x^{alpha,i} = 0 off the semigroup.
class AlgebraElement {
 public:
  using Terms = std::map<BasisIndex, Rational>;

  explicit AlgebraElement(ConfigPtr config) : config_(std::move(config)) {}
  static AlgebraElement basis(ConfigPtr config, BasisIndex index, const Rational& coeff = 1);
  /// The identity x^{0,0}.
  static AlgebraElement one(ConfigPtr config);

  const ConfigPtr& config() const noexcept { return config_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const BasisIndex& index) const;

  /// Adds c·x^{index}; silently drops labels outside the semigroup.
  void add_term(const BasisIndex& index, const Rational& c);
  void add_term(BasisIndex&& index, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const;

  bool operator==(const AlgebraElement& other) const;

 private:
  ConfigPtr config_;
  Terms terms_;
};

/// Throws std::invalid_argument unless both configurations agree.
void require_same_config(const ConfigPtr& a, const ConfigPtr& b);

/// Commutative product x^{a,i}·x^{b,j} = x^{a+b,i+j}, extended bilinearly.
AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v);

/// Grading operator: x^{a,i} -> a_p x^{a,i}.
AlgebraElement partial_star(Index p, const AlgebraElement& u);
/// Down-grading operator: x^{a,i} -> i_p x^{a,i-1_[p]}.
AlgebraElement partial_t(Index p, const AlgebraElement& u);
/// partial_star + partial_t.
AlgebraElement partial_full(Index p, const AlgebraElement& u);

/// The degree operator, built as sum of grading operators over J_{1,3} ∪ I_{4,5}
/// plus t_p·partial_t over I_6 ∪ bar I_{4,6}. Diagonal with eigenvalue theta.
AlgebraElement big_partial(const AlgebraElement& u);

/// Closed-form structure constants of the contact bracket on two basis
/// monomials, accumulated into `out` with weight `scale`.
void bracket_basis(const AlgebraConfig& config, const BasisIndex& a, const BasisIndex& b,
                   const Rational& scale, AlgebraElement& out);

/// Contact bracket through the closed six-family formula.
AlgebraElement bracket_closed(const AlgebraElement& u, const AlgebraElement& v);

/// Contact bracket evaluated literally from the operator definition
///   sum_{p in I} x^{sigma_p}(d_p u · d_pbar v - d_pbar u · d_p v)
///   + (2 - D)(u)·d_0 v - d_0 u·(2 - D)(v),
/// using multiply/partial_full/big_partial only. Independent oracle for bracket_closed.
AlgebraElement bracket_operator(const AlgebraElement& u, const AlgebraElement& v);

using BracketFn = std::function<AlgebraElement(const AlgebraElement&, const AlgebraElement&)>;

}  // namespace contactlie
