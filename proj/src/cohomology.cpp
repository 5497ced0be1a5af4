#include "contactlie/cohomology.hpp"

#include <mutex>
#include <unordered_map>

namespace contactlie {

namespace {

constexpr std::size_t kMaxStoredFailures = 5;

using PairKey = std::pair<BasisIndex, BasisIndex>;

// Memo table shared between copies of a functional.
class Memo {
 public:
  bool find(const BasisIndex& b, Rational& out) const {
    std::lock_guard lock(mutex_);
    auto it = values_.find(b);
    if (it == values_.end()) return false;
    out = it->second;
    return true;
  }
  void store(const BasisIndex& b, const Rational& v) {
    std::lock_guard lock(mutex_);
    values_.emplace(b, v);
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<BasisIndex, Rational, BasisIndexHash> values_;
};

BasisIndex shifted(const BasisIndex& b, Index p, std::int64_t delta) {
  return BasisIndex{b.alpha, b.exps.shifted(p, delta)};
}

Rational as_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

class CaseA {
 public:
  CaseA(Cocycle psi, Index pivot) : psi_(std::move(psi)), cfg_(psi_.config()), pivot_(pivot) {
    const Shape& s = cfg_->shape();
    if (pivot_ == 0) {
      if (cfg_->j0() != J0Mode::kNaturals) throw TrivializationError("unit pivot needs j0 = naturals");
      kind_ = Kind::kUnit;
      y_ = BasisIndex{cfg_->gamma().zero(), cfg_->zero_exponents()};
      return;
    }
    if (pivot_ < 0 || pivot_ >= cfg_->dim() || s.is_barred(pivot_))
      throw TrivializationError("pivot must be an unbarred index or 0");
    bar_ = s.bar(pivot_);
    switch (s.block(pivot_)) {
      case 2: kind_ = Kind::kI2; break;
      case 3: kind_ = Kind::kI3; break;
      case 5: kind_ = Kind::kI5; break;
      default: throw TrivializationError("pivot must lie in I2, I3 or I5");
    }
    y_ = BasisIndex{-cfg_->sigma(pivot_),
                    kind_ == Kind::kI5 ? cfg_->unit_exponents(bar_) : cfg_->zero_exponents()};
  }

  Rational operator()(const BasisIndex& b) {
    if (!cfg_->admits(b.exps)) return 0;
    Rational v;
    if (memo_.find(b, v)) return v;
    v = compute(b);
    memo_.store(b, v);
    return v;
  }

 private:
  enum class Kind { kI2, kI3, kI5, kUnit };

  Rational psi_y(const BasisIndex& x) const { return cfg_->admits(x.exps) ? psi_(y_, x) : Rational(0); }

  Rational compute(const BasisIndex& b) {
    const auto& i = b.exps;
    switch (kind_) {
      case Kind::kI2: {
        const Rational d = b.alpha[bar_] - b.alpha[pivot_];
        if (d != 0) {
          Rational r = psi_y(b);
          if (i[bar_] > 0) r -= as_rational(i[bar_]) * (*this)(shifted(b, bar_, -1));
          return r / d;
        }
        return psi_y(shifted(b, bar_, 1)) / as_rational(i[bar_] + 1);
      }
      case Kind::kI3: {
        const Rational d = b.alpha[bar_] - b.alpha[pivot_];
        if (d != 0) {
          Rational r = psi_y(b);
          if (i[pivot_] > 0) r += as_rational(i[pivot_]) * (*this)(shifted(b, pivot_, -1));
          if (i[bar_] > 0) r -= as_rational(i[bar_]) * (*this)(shifted(b, bar_, -1));
          return r / d;
        }
        Rational r = psi_y(shifted(b, bar_, 1));
        if (i[pivot_] > 0)
          r += as_rational(i[pivot_]) * (*this)(BasisIndex{b.alpha, i.shifted(pivot_, -1).shifted(bar_, 1)});
        return r / as_rational(i[bar_] + 1);
      }
      case Kind::kI5: {
        const Rational lambda = as_rational(i[bar_]) - b.alpha[pivot_];
        if (lambda != 0) {
          Rational r = psi_y(b);
          if (i[pivot_] > 0) r += as_rational(i[pivot_]) * (*this)(shifted(b, pivot_, -1));
          return r / lambda;
        }
        return -psi_y(shifted(b, pivot_, 1)) / as_rational(i[pivot_] + 1);
      }
      case Kind::kUnit: {
        const Rational a0 = b.alpha[0];
        if (a0 != 0) {
          Rational r = psi_y(b);
          if (i[0] > 0) r -= 2 * as_rational(i[0]) * (*this)(shifted(b, 0, -1));
          return r / (2 * a0);
        }
        return psi_y(shifted(b, 0, 1)) / (2 * as_rational(i[0] + 1));
      }
    }
    return 0;
  }

  Cocycle psi_;
  ConfigPtr cfg_;
  Index pivot_;
  Index bar_ = 0;
  Kind kind_ = Kind::kUnit;
  BasisIndex y_;
  Memo memo_;
};

}  // namespace

LinearFunctional LinearFunctional::from_map(ConfigPtr config, std::map<BasisIndex, Rational> values) {
  auto table = std::make_shared<const std::map<BasisIndex, Rational>>(std::move(values));
  return LinearFunctional(
      std::move(config),
      [table](const BasisIndex& b) {
        auto it = table->find(b);
        return it == table->end() ? Rational(0) : it->second;
      },
      "table");
}

LinearFunctional LinearFunctional::zero(ConfigPtr config) {
  return LinearFunctional(std::move(config), [](const BasisIndex&) { return Rational(0); }, "0");
}

Rational LinearFunctional::operator()(const AlgebraElement& u) const {
  Rational s;
  for (const auto& [b, c] : u.terms()) s += c * rule_(b);
  return s;
}

std::map<BasisIndex, Rational> LinearFunctional::restrict_to(const std::vector<BasisIndex>& labels) const {
  std::map<BasisIndex, Rational> out;
  for (const auto& b : labels) {
    Rational v = rule_(b);
    if (v != 0) out.emplace(b, std::move(v));
  }
  return out;
}

Cocycle Cocycle::from_table(ConfigPtr config,
                            const std::vector<std::tuple<BasisIndex, BasisIndex, Rational>>& entries) {
  std::map<PairKey, Rational> table;
  for (const auto& [a, b, v] : entries) {
    if (a == b) {
      if (v != 0) throw std::invalid_argument("cocycle table has a nonzero diagonal entry");
      continue;
    }
    PairKey key = a < b ? PairKey{a, b} : PairKey{b, a};
    Rational value = a < b ? v : Rational(-v);
    auto [it, inserted] = table.emplace(std::move(key), value);
    if (!inserted && it->second != value)
      throw std::invalid_argument("cocycle table entries contradict skew-symmetry");
  }
  for (auto it = table.begin(); it != table.end();) it = it->second == 0 ? table.erase(it) : std::next(it);
  auto shared = std::make_shared<const std::map<PairKey, Rational>>(std::move(table));
  return Cocycle(
      std::move(config),
      [shared](const BasisIndex& a, const BasisIndex& b) {
        if (a == b) return Rational(0);
        const bool forward = a < b;
        auto it = shared->find(forward ? PairKey{a, b} : PairKey{b, a});
        if (it == shared->end()) return Rational(0);
        return forward ? it->second : Rational(-it->second);
      },
      "table");
}

Cocycle Cocycle::zero(ConfigPtr config) {
  return Cocycle(std::move(config), [](const BasisIndex&, const BasisIndex&) { return Rational(0); }, "0");
}

Rational Cocycle::operator()(const AlgebraElement& u, const AlgebraElement& v) const {
  Rational s;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) s += ca * cb * rule_(a, b);
  return s;
}

Cocycle operator-(const Cocycle& a, const Cocycle& b) {
  require_same_config(a.config_, b.config_);
  return Cocycle(
      a.config_,
      // Explicit return type: a deduced one would be a gmpxx expression over dead temporaries.
      [ra = a.rule_, rb = b.rule_](const BasisIndex& x, const BasisIndex& y) -> Rational { return ra(x, y) - rb(x, y); },
      a.tag_ + " - " + b.tag_);
}

Cocycle coboundary(const LinearFunctional& f) {
  const ConfigPtr config = f.config();
  Cocycle psi(
      config,
      [config, f](const BasisIndex& a, const BasisIndex& b) {
        AlgebraElement out(config);
        bracket_basis(*config, a, b, 1, out);
        return f(out);
      },
      "coboundary(" + f.tag() + ")");
  psi.potential_ = std::make_shared<const LinearFunctional>(f);
  return psi;
}

CocycleReport check_cocycle(const Cocycle& psi, const std::vector<std::pair<BasisIndex, BasisIndex>>& pairs,
                            const std::vector<std::tuple<BasisIndex, BasisIndex, BasisIndex>>& triples,
                            const BracketFn& bracket) {
  const ConfigPtr& cfg = psi.config();
  CocycleReport report;
  std::size_t skew_stored = 0, jacobi_stored = 0;
  for (const auto& [a, b] : pairs) {
    ++report.pairs_checked;
    Rational s = psi(a, b) + psi(b, a);
    if (s != 0) {
      ++report.skew_failed;
      if (skew_stored++ < kMaxStoredFailures) report.failures.push_back({{a, b}, std::move(s)});
    }
  }
  for (const auto& [a, b, c] : triples) {
    ++report.triples_checked;
    const auto u = AlgebraElement::basis(cfg, a);
    const auto v = AlgebraElement::basis(cfg, b);
    const auto w = AlgebraElement::basis(cfg, c);
    Rational s = psi(bracket(u, v), w) + psi(bracket(v, w), u) + psi(bracket(w, u), v);
    if (s != 0) {
      ++report.jacobi_failed;
      if (jacobi_stored++ < kMaxStoredFailures) report.failures.push_back({{a, b, c}, std::move(s)});
    }
  }
  return report;
}

Index p_alpha(const AlgebraConfig& config, const GroupElement& alpha) {
  const Shape& s = config.shape();
  for (Index p : s.blocks(1, 1))
    if (alpha[p] != -1 || alpha[s.bar(p)] != -1) return p;
  throw TrivializationError("no index p in I1 with (alpha_p, alpha_bar p) != (-1,-1)");
}

bool case_a_applies(const AlgebraConfig& config) {
  return config.j0() == J0Mode::kNaturals || config.shape().rank() != config.shape().ell(1);
}

Index default_case_a_pivot(const AlgebraConfig& config) {
  const Shape& s = config.shape();
  for (int block : {2, 3, 5}) {
    const auto idx = s.blocks(block, block);
    if (!idx.empty()) return idx.front();
  }
  if (config.j0() == J0Mode::kNaturals) return 0;
  throw TrivializationError("no recursive trivializer for this shape: need I2, I3 or I5 nonempty, or j0 = naturals");
}

bool pivot_is_analog(const AlgebraConfig& config, Index pivot) {
  return pivot == 0 || config.shape().block(pivot) != 2;
}

LinearFunctional trivialize_case_A(const Cocycle& psi, Index pivot) {
  auto state = std::make_shared<CaseA>(psi, pivot);
  return LinearFunctional(
      psi.config(), [state](const BasisIndex& b) { return (*state)(b); },
      "caseA(" + (pivot == 0 ? std::string("1") : psi.config()->shape().name(pivot)) + ")");
}

LinearFunctional trivialize_case_B(const Cocycle& psi) {
  const ConfigPtr cfg = psi.config();
  if (cfg->j0() != J0Mode::kZero || cfg->shape().rank() != cfg->shape().ell(1))
    throw TrivializationError("closed-form trivializer needs j0 = zero and only block I1");
  if (!cfg->gamma().has_zero_coordinate())
    throw TrivializationError("closed-form trivializer needs Gamma_0 != {0}");

  const Shape& s = cfg->shape();
  const ExponentVector none = cfg->zero_exponents();
  const GroupElement two0 = *cfg->unit(0) + *cfg->unit(0);
  const GroupElement sigma = cfg->sigma_total();
  const BasisIndex one{cfg->gamma().zero(), none};
  const Rational l1 = s.ell(1);

  auto rule = [psi, cfg, none, two0, sigma, one, l1](const BasisIndex& b) -> Rational {
    if (!b.exps.is_zero()) return 0;
    const Shape& sh = cfg->shape();
    const GroupElement& alpha = b.alpha;
    if (alpha == sigma) return psi(BasisIndex{-two0, none}, BasisIndex{two0 + sigma, none}) / (4 * (2 + l1));
    if (alpha[0] != 0) return psi(one, b) / (2 * alpha[0]);
    const Index p = p_alpha(*cfg, alpha);
    const Index q = sh.bar(p);
    if (alpha[p] != alpha[q]) return psi(BasisIndex{-cfg->sigma(p), none}, b) / (alpha[q] - alpha[p]);
    const GroupElement up = *cfg->unit(p);
    const GroupElement shifted_alpha = alpha - up + *cfg->unit(q);
    return psi(BasisIndex{up + up, none}, BasisIndex{shifted_alpha, none}) / (2 * (alpha[q] + 1));
  };
  return LinearFunctional(cfg, std::move(rule), "caseB");
}

Trivialization trivialize(const Cocycle& psi) {
  const AlgebraConfig& cfg = *psi.config();
  if (case_a_applies(cfg)) {
    const Index pivot = default_case_a_pivot(cfg);
    return Trivialization{trivialize_case_A(psi, pivot), TrivializerCase::kA, pivot, pivot_is_analog(cfg, pivot)};
  }
  return Trivialization{trivialize_case_B(psi), TrivializerCase::kB, 0, false};
}

TrivializationReport verify_trivialization(const Cocycle& psi, const LinearFunctional& f,
                                           const std::vector<std::pair<BasisIndex, BasisIndex>>& pairs) {
  const ConfigPtr& cfg = psi.config();
  TrivializationReport report;
  for (const auto& [a, b] : pairs) {
    ++report.checked;
    AlgebraElement br(cfg);
    bracket_basis(*cfg, a, b, 1, br);
    Rational lhs = psi.potential() ? (*psi.potential())(br) : psi(a, b);
    Rational rhs = f(br);
    if (lhs != rhs) {
      ++report.failed;
      if (report.failures.size() < kMaxStoredFailures)
        report.failures.push_back({a, b, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

}  // namespace contactlie
