#include "contactlie/gamma.hpp"

#include <stdexcept>
#include <string>

namespace contactlie {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("group coordinate overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("group coordinate overflow");
  return r;
}

}  // namespace

bool GroupElement::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  Coords c(coords_.size());
  Vector v(vec_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = checked_add(coords_[k], other.coords_[k]);
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = vec_[p] + other.vec_[p];
  return {std::move(c), std::move(v)};
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  Coords c(coords_.size());
  Vector v(vec_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = checked_sub(coords_[k], other.coords_[k]);
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = vec_[p] - other.vec_[p];
  return {std::move(c), std::move(v)};
}

GroupElement GroupElement::operator-() const {
  Coords c(coords_.size());
  Vector v(vec_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = checked_sub(0, coords_[k]);
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = -vec_[p];
  return {std::move(c), std::move(v)};
}

Vector unit_vector(const Shape& shape, Index p, const Rational& value) {
  Vector v(static_cast<std::size_t>(shape.dim()));
  v.at(static_cast<std::size_t>(p)) = value;
  return v;
}

GammaLattice::GammaLattice(const Shape& shape, std::vector<Vector> generators)
    : shape_(shape), generators_(std::move(generators)) {
  const std::size_t dim = static_cast<std::size_t>(shape_.dim());
  const std::size_t g = generators_.size();

  for (std::size_t k = 0; k < g; ++k) {
    if (generators_[k].size() != dim)
      throw ConfigError("gamma-length", "generator " + std::to_string(k + 1) + " has " +
                                            std::to_string(generators_[k].size()) + " entries, expected " +
                                            std::to_string(dim));
    for (Index p = 1; p < shape_.dim(); ++p)
      if (shape_.group_vanishes(p) && generators_[k][static_cast<std::size_t>(p)] != 0)
        throw ConfigError("gamma-support", "generator " + std::to_string(k + 1) +
                                               " is nonzero at slot " + shape_.name(p) +
                                               " (entries on I6 and bar I4..I6 must vanish)");
    if (generators_[k][0] != 0) gamma0_nonzero_ = true;
  }

  // Row-reduce a copy to find one pivot coordinate per generator.
  std::vector<Vector> work = generators_;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < g; ++col) {
    std::size_t sel = row;
    while (sel < g && work[sel][col] == 0) ++sel;
    if (sel == g) continue;
    std::swap(work[row], work[sel]);
    for (std::size_t r = 0; r < g; ++r) {
      if (r == row || work[r][col] == 0) continue;
      const Rational f = work[r][col] / work[row][col];
      for (std::size_t c = col; c < dim; ++c) work[r][c] -= f * work[row][c];
    }
    pivots_.push_back(static_cast<Index>(col));
    ++row;
  }
  if (row < g) throw ConfigError("gamma-independent", "generators are linearly dependent");

  // Invert the g×g block M[k][j] = generator_k[pivot_j] by Gauss-Jordan.
  std::vector<std::vector<Rational>> m(g, std::vector<Rational>(2 * g));
  for (std::size_t k = 0; k < g; ++k) {
    for (std::size_t j = 0; j < g; ++j) m[k][j] = generators_[k][static_cast<std::size_t>(pivots_[j])];
    m[k][g + k] = 1;
  }
  for (std::size_t c = 0; c < g; ++c) {
    std::size_t sel = c;
    while (m[sel][c] == 0) ++sel;
    std::swap(m[c], m[sel]);
    const Rational lead = m[c][c];
    for (auto& x : m[c]) x /= lead;
    for (std::size_t r = 0; r < g; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * g; ++j) m[r][j] -= f * m[c][j];
    }
  }
  inv_.assign(g, std::vector<Rational>(g));
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < g; ++k) inv_[j][k] = m[j][g + k];

  for (Index p = 1; p < shape_.dim(); ++p) {
    const bool required = shape_.in_blocks(p, 1, 5) || shape_.in_bar_blocks(p, 1, 3);
    if (required && !membership(unit_vector(shape_, p)))
      throw ConfigError("gamma-units", "unit vector 1_[" + shape_.name(p) + "] is not in gamma");
  }
  if (gamma0_nonzero_ && !membership(unit_vector(shape_, 0)))
    throw ConfigError("gamma-zero-unit",
                      "gamma has elements with nonzero 0-coordinate but 1_[0] is not in gamma");
}

std::optional<Vector> GammaLattice::rational_coordinates(const Vector& vec) const {
  if (vec.size() != static_cast<std::size_t>(shape_.dim())) return std::nullopt;
  const std::size_t g = generators_.size();
  Vector c(g);
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t j = 0; j < g; ++j) c[k] += vec[static_cast<std::size_t>(pivots_[j])] * inv_[j][k];
  for (std::size_t p = 0; p < vec.size(); ++p) {
    Rational s;
    for (std::size_t k = 0; k < g; ++k) s += c[k] * generators_[k][p];
    if (s != vec[p]) return std::nullopt;
  }
  return c;
}

std::optional<Coords> GammaLattice::membership(const Vector& vec) const {
  auto c = rational_coordinates(vec);
  if (!c) return std::nullopt;
  Coords out(c->size());
  for (std::size_t k = 0; k < out.size(); ++k)
    if (!to_int64((*c)[k], out[k])) return std::nullopt;
  return out;
}

GroupElement GammaLattice::element(Coords coords) const {
  if (coords.size() != generators_.size()) throw std::invalid_argument("coordinate count mismatch");
  Vector v(static_cast<std::size_t>(shape_.dim()));
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    const Rational ck(static_cast<long>(coords[k]));
    for (std::size_t p = 0; p < v.size(); ++p) v[p] += ck * generators_[k][p];
  }
  return {std::move(coords), std::move(v)};
}

std::optional<GroupElement> GammaLattice::resolve(const Vector& vec) const {
  auto c = membership(vec);
  if (!c) return std::nullopt;
  return GroupElement(std::move(*c), vec);
}

GroupElement GammaLattice::zero() const {
  return {Coords(generators_.size(), 0), Vector(static_cast<std::size_t>(shape_.dim()))};
}

}  // namespace contactlie
