#include "contactlie/algebra.hpp"

#include <optional>
#include <stdexcept>

namespace contactlie {

std::size_t BasisIndexHash::operator()(const BasisIndex& b) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::int64_t v) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto c : b.alpha.coords()) mix(c);
  for (auto e : b.exps.entries()) mix(e);
  return h;
}

void require_same_config(const ConfigPtr& a, const ConfigPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw std::invalid_argument("elements belong to different configurations");
}

AlgebraElement AlgebraElement::basis(ConfigPtr config, BasisIndex index, const Rational& coeff) {
  AlgebraElement e(std::move(config));
  e.add_term(std::move(index), coeff);
  return e;
}

AlgebraElement AlgebraElement::one(ConfigPtr config) {
  BasisIndex idx{config->gamma().zero(), config->zero_exponents()};
  return basis(std::move(config), std::move(idx));
}

Rational AlgebraElement::coefficient(const BasisIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const BasisIndex& index, const Rational& c) {
  if (c == 0 || !config_->admits(index.exps)) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AlgebraElement::add_term(BasisIndex&& index, const Rational& c) {
  if (c == 0 || !config_->admits(index.exps)) return;
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    terms_.emplace(std::move(index), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_config(config_, other.config_);
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_config(config_, other.config_);
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [idx, c] : out.terms_) c = -c;
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  require_same_config(config_, other.config_);
  return terms_ == other.terms_;
}

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_config(u.config(), v.config());
  AlgebraElement out(u.config());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) out.add_term(BasisIndex{a.alpha + b.alpha, a.exps + b.exps}, ca * cb);
  return out;
}

AlgebraElement partial_star(Index p, const AlgebraElement& u) {
  if (p < 0 || p >= u.config()->dim()) throw std::out_of_range("partial_star index out of range");
  AlgebraElement out(u.config());
  for (const auto& [a, c] : u.terms()) out.add_term(a, a.alpha[p] * c);
  return out;
}

AlgebraElement partial_t(Index p, const AlgebraElement& u) {
  if (p < 0 || p >= u.config()->dim()) throw std::out_of_range("partial_t index out of range");
  AlgebraElement out(u.config());
  for (const auto& [a, c] : u.terms()) {
    if (a.exps[p] == 0) continue;
    out.add_term(BasisIndex{a.alpha, a.exps.shifted(p, -1)}, Rational(static_cast<long>(a.exps[p])) * c);
  }
  return out;
}

AlgebraElement partial_full(Index p, const AlgebraElement& u) {
  return partial_star(p, u) + partial_t(p, u);
}

AlgebraElement big_partial(const AlgebraElement& u) {
  const AlgebraConfig& config = *u.config();
  const Shape& s = config.shape();
  AlgebraElement out(u.config());
  for (Index p = 1; p < s.dim(); ++p) {
    if (s.theta_group_slot(p)) out += partial_star(p, u);
    if (s.theta_exponent_slot(p)) {
      auto tp = AlgebraElement::basis(u.config(), BasisIndex{config.gamma().zero(), config.unit_exponents(p)});
      out += multiply(tp, partial_t(p, u));
    }
  }
  return out;
}

void bracket_basis(const AlgebraConfig& config, const BasisIndex& a, const BasisIndex& b,
                   const Rational& scale, AlgebraElement& out) {
  const Shape& s = config.shape();
  const int n = s.rank();
  std::optional<GroupElement> ab_cache;
  auto ab = [&]() -> const GroupElement& {
    if (!ab_cache) ab_cache = a.alpha + b.alpha;
    return *ab_cache;
  };
  const ExponentVector ij = a.exps + b.exps;
  const auto& al = a.alpha;
  const auto& be = b.alpha;
  const auto& i = a.exps;
  const auto& j = b.exps;
  auto num = [](std::int64_t v) { return Rational(static_cast<long>(v)); };

  Rational c;
  for (Index p = 1; p <= n; ++p) {
    const Index q = p + n;  // bar(p)
    const int blk = s.block(p);
    std::optional<GroupElement> shifted;
    auto target = [&]() -> const GroupElement& {
      if (!shifted) shifted = config.sigma(p) + ab();
      return *shifted;
    };

    if (blk <= 3) {
      c = al[p] * be[q] - al[q] * be[p];
      if (c != 0) out.add_term(BasisIndex{target(), ij}, scale * c);
    }
    if (blk >= 2 && blk <= 5) {
      c = al[p] * num(j[q]) - num(i[q]) * be[p];
      if (c != 0) out.add_term(BasisIndex{target(), ij.shifted(q, -1)}, scale * c);
    }
    if (blk == 3) {
      c = num(i[p]) * be[q] - num(j[p]) * al[q];
      if (c != 0) out.add_term(BasisIndex{target(), ij.shifted(p, -1)}, scale * c);
    }
    if (blk == 3 || blk >= 5) {
      const std::int64_t m = i[p] * j[q] - i[q] * j[p];
      if (m != 0) out.add_term(BasisIndex{target(), ij.shifted(p, -1).shifted(q, -1)}, scale * num(m));
    }
  }

  const Rational wa = 2 - theta(config, al, i);
  const Rational wb = 2 - theta(config, be, j);
  c = wa * be[0] - al[0] * wb;
  if (c != 0) out.add_term(BasisIndex{ab(), ij}, scale * c);
  c = wa * num(j[0]) - num(i[0]) * wb;
  if (c != 0) out.add_term(BasisIndex{ab(), ij.shifted(0, -1)}, scale * c);
}

AlgebraElement bracket_closed(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_config(u.config(), v.config());
  AlgebraElement out(u.config());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) bracket_basis(*u.config(), a, b, ca * cb, out);
  return out;
}

AlgebraElement bracket_operator(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_config(u.config(), v.config());
  const ConfigPtr& cfg = u.config();
  const Shape& s = cfg->shape();
  AlgebraElement out(cfg);
  for (Index p = 1; p <= s.rank(); ++p) {
    const Index q = s.bar(p);
    auto x_sigma = AlgebraElement::basis(cfg, BasisIndex{cfg->sigma(p), cfg->zero_exponents()});
    AlgebraElement inner = multiply(partial_full(p, u), partial_full(q, v)) -
                           multiply(partial_full(q, u), partial_full(p, v));
    out += multiply(x_sigma, inner);
  }
  const AlgebraElement two_minus_u = Rational(2) * u - big_partial(u);
  const AlgebraElement two_minus_v = Rational(2) * v - big_partial(v);
  out += multiply(two_minus_u, partial_full(0, v));
  out -= multiply(partial_full(0, u), two_minus_v);
  return out;
}

}  // namespace contactlie
