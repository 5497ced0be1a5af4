#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "contactlie/rational.hpp"
#include "contactlie/shape.hpp"

namespace contactlie {

using Coords = std::vector<std::int64_t>;

/// An element of Gamma: integer coordinates over the lattice generators plus the
/// resolved rational vector (indexed by hat-J). Identity is by coordinates.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(Coords coords, Vector vec) : coords_(std::move(coords)), vec_(std::move(vec)) {}

  const Coords& coords() const noexcept { return coords_; }
  const Vector& vector() const noexcept { return vec_; }
  const Rational& operator[](Index p) const { return vec_[static_cast<std::size_t>(p)]; }

  bool is_zero() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;

  bool operator==(const GroupElement& other) const noexcept { return coords_ == other.coords_; }
  std::strong_ordering operator<=>(const GroupElement& other) const noexcept {
    return coords_ <=> other.coords_;
  }

 private:
  Coords coords_;
  Vector vec_;
};

/// A free finitely generated subgroup of Q^{1+2n}, given by a Z-basis.
///
/// Construction validates the support condition (group vectors vanish on
/// I_6 ∪ bar I_{4,6}), linear independence of the generators, membership of
/// the unit vectors 1_[p] for p in J_{1,3} ∪ I_{4,5}, and membership of 1_[0]
/// whenever some element has a nonzero 0-coordinate.
class GammaLattice {
 public:
  GammaLattice(const Shape& shape, std::vector<Vector> generators);

  const Shape& shape() const noexcept { return shape_; }
  const std::vector<Vector>& generators() const noexcept { return generators_; }
  std::size_t rank() const noexcept { return generators_.size(); }

  /// Integer coordinates of `vec` over the generators, or nullopt if `vec` is
  /// not in the lattice.
  std::optional<Coords> membership(const Vector& vec) const;

  /// Rational coordinates of `vec` if it lies in the Q-span (ignores integrality).
  std::optional<Vector> rational_coordinates(const Vector& vec) const;

  GroupElement element(Coords coords) const;
  std::optional<GroupElement> resolve(const Vector& vec) const;
  GroupElement zero() const;

  /// Gamma_0 != {0}.
  bool has_zero_coordinate() const noexcept { return gamma0_nonzero_; }

  bool operator==(const GammaLattice& other) const {
    return shape_ == other.shape_ && generators_ == other.generators_;
  }

 private:
  Shape shape_;
  std::vector<Vector> generators_;
  std::vector<Index> pivots_;              // one hat-J coordinate per generator
  std::vector<std::vector<Rational>> inv_; // inverse of generators restricted to pivots
  bool gamma0_nonzero_ = false;
};

/// Unit vector a_[p] of length shape.dim().
Vector unit_vector(const Shape& shape, Index p, const Rational& value = 1);

}  // namespace contactlie
