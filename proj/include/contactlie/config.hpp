#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "contactlie/gamma.hpp"
#include "contactlie/rational.hpp"
#include "contactlie/shape.hpp"

namespace contactlie {

/// Exponents (i_0, i_1, ..., i_2n) indexed by hat-J. Entries may go negative in
/// intermediate arithmetic; AlgebraConfig::admits decides membership in the semigroup.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : entries_(dim, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t operator[](Index p) const { return entries_[static_cast<std::size_t>(p)]; }
  std::int64_t& operator[](Index p) { return entries_[static_cast<std::size_t>(p)]; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_zero() const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator-(const ExponentVector& other) const;
  /// Copy with entry p shifted by delta.
  ExponentVector shifted(Index p, std::int64_t delta) const;

  bool operator==(const ExponentVector&) const = default;
  std::strong_ordering operator<=>(const ExponentVector& other) const noexcept {
    return entries_ <=> other.entries_;
  }

 private:
  std::vector<std::int64_t> entries_;
};

/// The semigroup's 0-component: {0} or all of N.
enum class J0Mode { kZero, kNaturals };

class AlgebraConfig;
using ConfigPtr = std::shared_ptr<const AlgebraConfig>;

/// The full parameter set (shape, Gamma, J0) of one contact algebra.
class AlgebraConfig {
 public:
  /// Validates J0 + Gamma_0 != {0} on top of the lattice checks.
  static ConfigPtr create(Shape shape, std::vector<Vector> generators, J0Mode j0);

  const Shape& shape() const noexcept { return gamma_.shape(); }
  const GammaLattice& gamma() const noexcept { return gamma_; }
  J0Mode j0() const noexcept { return j0_; }
  int dim() const noexcept { return shape().dim(); }

  /// Whether exponent slot p may be nonzero.
  bool exponent_allowed(Index p) const;
  /// Nonnegative everywhere and zero on every forbidden slot.
  bool admits(const ExponentVector& exps) const;

  /// sigma_p as a group element, for p in J (sigma of a barred index equals
  /// sigma of its partner; zero on block 6).
  const GroupElement& sigma(Index p) const;
  /// 1_[p] as a group element when it belongs to Gamma.
  const std::optional<GroupElement>& unit(Index p) const;
  /// sigma = sum of sigma_p over I_{1,5}.
  const GroupElement& sigma_total() const noexcept { return sigma_total_; }

  ExponentVector zero_exponents() const { return ExponentVector(static_cast<std::size_t>(dim())); }
  ExponentVector unit_exponents(Index p, std::int64_t value = 1) const;

  bool operator==(const AlgebraConfig& other) const {
    return j0_ == other.j0_ && gamma_ == other.gamma_;
  }

 private:
  AlgebraConfig(GammaLattice gamma, J0Mode j0);

  GammaLattice gamma_;
  J0Mode j0_;
  std::vector<GroupElement> sigma_;              // by hat-J index; [0] unused
  std::vector<std::optional<GroupElement>> units_;
  GroupElement sigma_total_;
};

/// sigma_p as a plain vector. p = 0 or p in block 6 (either side) gives zero.
Vector sigma(const Shape& shape, Index p);

/// Weight of (alpha, i): group entries over J_{1,3} ∪ I_{4,5} plus exponents over
/// I_6 ∪ bar I_{4,6}. Additive in both arguments.
Rational theta(const AlgebraConfig& config, const GroupElement& alpha, const ExponentVector& exps);

}  // namespace contactlie
