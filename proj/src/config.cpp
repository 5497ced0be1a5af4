#include "contactlie/config.hpp"

#include <stdexcept>

namespace contactlie {

bool ExponentVector::is_zero() const {
  for (auto e : entries_)
    if (e != 0) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector out(entries_.size());
  for (std::size_t p = 0; p < entries_.size(); ++p) {
    if (__builtin_add_overflow(entries_[p], other.entries_[p], &out.entries_[p]))
      throw std::overflow_error("exponent overflow");
  }
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  ExponentVector out(entries_.size());
  for (std::size_t p = 0; p < entries_.size(); ++p) {
    if (__builtin_sub_overflow(entries_[p], other.entries_[p], &out.entries_[p]))
      throw std::overflow_error("exponent overflow");
  }
  return out;
}

ExponentVector ExponentVector::shifted(Index p, std::int64_t delta) const {
  ExponentVector out = *this;
  auto& e = out.entries_.at(static_cast<std::size_t>(p));
  if (__builtin_add_overflow(e, delta, &e)) throw std::overflow_error("exponent overflow");
  return out;
}

Vector sigma(const Shape& shape, Index p) {
  Vector v(static_cast<std::size_t>(shape.dim()));
  if (p == 0) return v;
  const Index q = shape.is_barred(p) ? shape.bar(p) : p;
  switch (shape.block(q)) {
    case 1:
    case 2:
    case 3:
      v[static_cast<std::size_t>(q)] = -1;
      v[static_cast<std::size_t>(shape.bar(q))] = -1;
      break;
    case 4:
    case 5:
      v[static_cast<std::size_t>(q)] = -1;
      break;
    default:
      break;
  }
  return v;
}

AlgebraConfig::AlgebraConfig(GammaLattice gamma, J0Mode j0) : gamma_(std::move(gamma)), j0_(j0) {
  const Shape& s = shape();
  sigma_.resize(static_cast<std::size_t>(s.dim()), gamma_.zero());
  units_.resize(static_cast<std::size_t>(s.dim()));
  sigma_total_ = gamma_.zero();
  for (Index p = 0; p < s.dim(); ++p) {
    if (p > 0) {
      auto g = gamma_.resolve(contactlie::sigma(s, p));
      // Guaranteed by the unit-vector checks in GammaLattice.
      if (!g) throw ConfigError("gamma-units", "sigma_" + s.name(p) + " is not in gamma");
      sigma_[static_cast<std::size_t>(p)] = std::move(*g);
    }
    units_[static_cast<std::size_t>(p)] = gamma_.resolve(unit_vector(s, p));
  }
  for (Index p : s.blocks(1, 5)) sigma_total_ = sigma_total_ + sigma_[static_cast<std::size_t>(p)];
}

ConfigPtr AlgebraConfig::create(Shape shape, std::vector<Vector> generators, J0Mode j0) {
  GammaLattice gamma(shape, std::move(generators));
  if (j0 == J0Mode::kZero && !gamma.has_zero_coordinate())
    throw ConfigError("j0-gamma0", "J0 = {0} requires some gamma element with nonzero 0-coordinate");
  return ConfigPtr(new AlgebraConfig(std::move(gamma), j0));
}

bool AlgebraConfig::exponent_allowed(Index p) const {
  if (p == 0) return j0_ == J0Mode::kNaturals;
  return !shape().exponent_forbidden(p);
}

bool AlgebraConfig::admits(const ExponentVector& exps) const {
  if (exps.size() != static_cast<std::size_t>(dim())) return false;
  for (Index p = 0; p < dim(); ++p) {
    if (exps[p] < 0) return false;
    if (exps[p] != 0 && !exponent_allowed(p)) return false;
  }
  return true;
}

const GroupElement& AlgebraConfig::sigma(Index p) const {
  if (p <= 0 || p >= dim()) throw std::out_of_range("sigma index out of range");
  return sigma_[static_cast<std::size_t>(p)];
}

const std::optional<GroupElement>& AlgebraConfig::unit(Index p) const {
  return units_.at(static_cast<std::size_t>(p));
}

ExponentVector AlgebraConfig::unit_exponents(Index p, std::int64_t value) const {
  ExponentVector e = zero_exponents();
  e[p] = value;
  return e;
}

Rational theta(const AlgebraConfig& config, const GroupElement& alpha, const ExponentVector& exps) {
  const Shape& s = config.shape();
  Rational sum;
  for (Index p = 1; p < s.dim(); ++p) {
    if (s.theta_group_slot(p)) sum += alpha[p];
    if (s.theta_exponent_slot(p)) sum += exps[p];
  }
  return sum;
}

}  // namespace contactlie
