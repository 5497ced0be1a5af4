#include "contactlie/derivations.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <unordered_map>

#include "contactlie/io.hpp"
#include "contactlie/window.hpp"

namespace contactlie {

namespace {

constexpr std::size_t kMaxStoredFailures = 5;

Rational coords_dot(const Coords& coords, const Vector& values) {
  Rational s;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) s += Rational(static_cast<long>(coords[k])) * values[k];
  return s;
}

AlgebraElement monomial(const ConfigPtr& config, GroupElement alpha, ExponentVector exps) {
  return AlgebraElement::basis(config, BasisIndex{std::move(alpha), std::move(exps)});
}

}  // namespace

AlgebraElement LinearOperator::operator()(const AlgebraElement& u) const {
  AlgebraElement out(config_);
  for (const auto& [b, c] : u.terms()) {
    AlgebraElement img = rule_(b);
    img *= c;
    out += img;
  }
  return out;
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  require_same_config(a.config_, b.config_);
  return LinearOperator(
      a.config_, [ra = a.rule_, rb = b.rule_](const BasisIndex& x) { return ra(x) + rb(x); },
      a.tag_ + " + " + b.tag_);
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  require_same_config(a.config_, b.config_);
  return LinearOperator(
      a.config_, [ra = a.rule_, rb = b.rule_](const BasisIndex& x) { return ra(x) - rb(x); },
      a.tag_ + " - " + b.tag_);
}

LinearOperator operator*(const Rational& s, const LinearOperator& a) {
  return LinearOperator(
      a.config_, [s, ra = a.rule_](const BasisIndex& x) { return s * ra(x); },
      format_rational(s) + "*(" + a.tag_ + ")");
}

LinearOperator zero_operator(ConfigPtr config) {
  return LinearOperator(
      config, [config](const BasisIndex&) { return AlgebraElement(config); }, "0");
}

HomGamma::HomGamma(ConfigPtr config, Vector values) : config_(std::move(config)), values_(std::move(values)) {
  if (values_.size() != config_->gamma().rank())
    throw std::invalid_argument("homomorphism needs one value per gamma generator");
  for (Index p : config_->shape().blocks(1, 5))
    if (coords_dot(config_->sigma(p).coords(), values_) != 0)
      throw std::invalid_argument("homomorphism does not vanish on sigma_" + config_->shape().name(p));
}

HomGamma HomGamma::zero(ConfigPtr config) {
  Vector v(config->gamma().rank());
  return HomGamma(std::move(config), std::move(v));
}

Rational HomGamma::operator()(const GroupElement& alpha) const { return coords_dot(alpha.coords(), values_); }

Vector hom_mu_values(const AlgebraConfig& config, Index p) {
  const auto& gens = config.gamma().generators();
  Vector v(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (p == 0) v[k] = gens[k][0];
    else v[k] = gens[k][static_cast<std::size_t>(config.shape().bar(p))] - gens[k][static_cast<std::size_t>(p)];
  }
  return v;
}

namespace {

std::vector<Vector> sigma_constraints(const AlgebraConfig& config) {
  const std::size_t g = config.gamma().rank();
  std::vector<Vector> rows;
  for (Index p : config.shape().blocks(1, 5)) {
    Vector row(g);
    const auto& c = config.sigma(p).coords();
    for (std::size_t k = 0; k < g; ++k) row[k] = Rational(static_cast<long>(c[k]));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<Vector> hom_prime_basis(const AlgebraConfig& config) {
  return nullspace(sigma_constraints(config), config.gamma().rank());
}

std::vector<Vector> hom_star_basis(const AlgebraConfig& config) {
  const std::size_t g = config.gamma().rank();
  std::vector<Vector> constraints = sigma_constraints(config);
  std::vector<Vector> span;
  for (Index p : config.shape().blocks(1, 3)) span.push_back(hom_mu_values(config, p));
  if (config.j0() == J0Mode::kZero) span.push_back(hom_mu_values(config, 0));
  for (std::size_t k : rref(span, g)) {
    Vector e(g);
    e[k] = 1;
    constraints.push_back(std::move(e));
  }
  return nullspace(constraints, g);
}

LinearOperator ad(const AlgebraElement& u) {
  return LinearOperator(
      u.config(),
      [u](const BasisIndex& b) {
        AlgebraElement out(u.config());
        for (const auto& [a, c] : u.terms()) bracket_basis(*u.config(), a, b, c, out);
        return out;
      },
      "ad(" + format_element(u) + ")");
}

LinearOperator d_mu(const HomGamma& mu) {
  std::string tag = "dmu(";
  for (std::size_t k = 0; k < mu.values().size(); ++k) tag += (k ? "," : "") + format_rational(mu.values()[k]);
  tag += ")";
  const ConfigPtr config = mu.config();
  return LinearOperator(
      config,
      [config, mu](const BasisIndex& b) { return AlgebraElement::basis(config, b, mu(b.alpha)); }, tag);
}

std::vector<Index> outer_indices(const AlgebraConfig& config) {
  const Shape& s = config.shape();
  std::vector<Index> out;
  for (Index p = 1; p < s.dim(); ++p)
    if (s.in_bar_blocks(p, 2, 2) || s.in_blocks(p, 3, 3) || s.in_bar_blocks(p, 3, 3) || s.in_blocks(p, 5, 5))
      out.push_back(p);
  return out;
}

LinearOperator outer_partial_t(ConfigPtr config, Index p) {
  const auto allowed = outer_indices(*config);
  if (std::find(allowed.begin(), allowed.end(), p) == allowed.end())
    throw std::invalid_argument("partial_t is an outer derivation only for p in bar I2, J3, I5");
  const std::string tag = "dt(" + config->shape().name(p) + ")";
  return LinearOperator(
      config,
      [config, p](const BasisIndex& b) {
        return partial_t(p, AlgebraElement::basis(config, b));
      },
      tag);
}

LinearOperator grading_operator(ConfigPtr config, Index p) {
  if (p < 0 || p >= config->dim()) throw std::out_of_range("grading operator index out of range");
  const std::string tag = "dstar(" + config->shape().name(p) + ")";
  return LinearOperator(
      config,
      [config, p](const BasisIndex& b) { return partial_star(p, AlgebraElement::basis(config, b)); }, tag);
}

DerivationReport check_derivation(const LinearOperator& d,
                                  const std::vector<std::pair<BasisIndex, BasisIndex>>& pairs,
                                  const BracketFn& bracket) {
  DerivationReport report;
  const ConfigPtr& cfg = d.config();
  for (const auto& [a, b] : pairs) {
    const auto u = AlgebraElement::basis(cfg, a);
    const auto v = AlgebraElement::basis(cfg, b);
    AlgebraElement lhs = d(bracket(u, v));
    AlgebraElement rhs = bracket(d(u), v) + bracket(u, d(v));
    ++report.checked;
    if (!(lhs == rhs)) {
      ++report.failed;
      if (report.failures.size() < kMaxStoredFailures)
        report.failures.push_back({a, b, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

IdentityReport check_sigma_identity(ConfigPtr config, Index p, const std::vector<BasisIndex>& window) {
  if (!config->shape().in_blocks(p, 1, 3)) throw std::invalid_argument("identity holds for p in I1..I3 only");
  const Index q = config->shape().bar(p);
  const LinearOperator lhs_op = d_mu(HomGamma(config, hom_mu_values(*config, p)));
  const AlgebraElement x = monomial(config, -config->sigma(p), config->zero_exponents());
  const LinearOperator ad_x = ad(x);

  IdentityReport report;
  for (const auto& w : window) {
    const auto e = AlgebraElement::basis(config, w);
    AlgebraElement lhs = lhs_op(w);
    AlgebraElement rhs = ad_x(w) + partial_t(p, e) - partial_t(q, e);
    ++report.checked;
    if (!(lhs == rhs)) {
      ++report.failed;
      if (report.failures.size() < kMaxStoredFailures) report.failures.push_back({w, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

ProbeSets probe_sets(const ConfigPtr& config) {
  const Shape& s = config->shape();
  const GroupElement zero = config->gamma().zero();
  const ExponentVector none = config->zero_exponents();
  auto unit = [&](Index p) { return *config->unit(p); };
  auto x_minus_sigma = [&](Index p) { return monomial(config, -config->sigma(p), none); };
  auto x_minus_sigma_t = [&](Index q) {
    return monomial(config, -config->sigma(q), config->unit_exponents(s.bar(q)));
  };
  auto t_pair = [&](Index r) {
    ExponentVector e = config->unit_exponents(r);
    e[s.bar(r)] = 1;
    return monomial(config, zero, e);
  };

  ProbeSets out;
  for (Index p : s.blocks(2, 3)) out.a1.push_back(x_minus_sigma(p));
  for (Index q : s.blocks(5, 5)) out.a1.push_back(x_minus_sigma_t(q));
  if (config->j0() == J0Mode::kNaturals) out.a1.push_back(AlgebraElement::one(config));

  for (Index p : s.blocks(1, 1)) out.a2.push_back(x_minus_sigma(p));
  for (Index q : s.blocks(4, 4)) out.a2.push_back(x_minus_sigma_t(q));
  for (Index r : s.blocks(6, 6)) out.a2.push_back(t_pair(r));
  if (config->j0() == J0Mode::kZero) out.a2.push_back(AlgebraElement::one(config));

  const bool gamma0 = config->gamma().has_zero_coordinate();
  for (Index p : s.blocks(1, 5)) out.a3.push_back(monomial(config, unit(p) + unit(p), none));
  for (Index q : s.blocks(6, 6)) out.a3.push_back(monomial(config, zero, config->unit_exponents(q, 2)));
  if (gamma0) out.a3.push_back(monomial(config, unit(0) + unit(0), none));
  else out.a3.push_back(monomial(config, zero, config->unit_exponents(0)));

  for (Index p : s.blocks(1, 3)) out.a4.push_back(monomial(config, unit(s.bar(p)) + unit(s.bar(p)), none));
  for (Index q : s.blocks(4, 6)) out.a4.push_back(monomial(config, zero, config->unit_exponents(s.bar(q), 2)));
  if (gamma0) out.a4.push_back(monomial(config, -(unit(0) + unit(0)), none));
  return out;
}

LinearOperator DerivationDecomposition::reconstruct() const {
  const ConfigPtr& config = mu.config();
  LinearOperator out = d_mu(mu);
  for (const auto& [p, v] : c)
    if (v != 0) out = out + v * outer_partial_t(config, p);
  if (!inner.is_zero()) out = out + ad(inner);
  return out;
}

namespace {

std::int64_t label_size(const BasisIndex& b) {
  std::int64_t s = 0;
  for (auto c : b.alpha.coords()) s += c < 0 ? -c : c;
  for (auto e : b.exps.entries()) s += e;
  return s;
}

}  // namespace

DerivationDecomposer::DerivationDecomposer(ConfigPtr config, std::vector<BasisIndex> window,
                                           std::vector<BasisIndex> inner_support)
    : config_(std::move(config)), window_(std::move(window)), support_(std::move(inner_support)) {
  std::stable_sort(window_.begin(), window_.end(), [](const BasisIndex& a, const BasisIndex& b) {
    const auto sa = label_size(a), sb = label_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  outer_ = outer_indices(*config_);
  hom_basis_ = hom_star_basis(*config_);
  columns_ = support_.size() + outer_.size() + hom_basis_.size();
  echelon_ = SparseEchelon(columns_);

  const AlgebraConfig& cfg = *config_;
  for (std::size_t pos = 0; pos < window_.size() && !echelon_.full_rank(); ++pos) {
    const BasisIndex& w = window_[pos];
    const AlgebraElement ew = AlgebraElement::basis(config_, w);
    std::map<BasisIndex, SparseRow> rows;
    auto scatter = [&rows](std::size_t col, const AlgebraElement& img) {
      for (const auto& [label, v] : img.terms()) rows[label].emplace_back(col, v);
    };
    std::size_t col = 0;
    for (const auto& s : support_) {
      AlgebraElement img(config_);
      bracket_basis(cfg, s, w, 1, img);
      scatter(col++, img);
    }
    for (Index p : outer_) scatter(col++, partial_t(p, ew));
    for (const auto& h : hom_basis_) {
      const Rational v = coords_dot(w.alpha.coords(), h);
      scatter(col++, v * ew);
    }
    for (auto& [label, row] : rows) {
      if (echelon_.add(std::move(row), equations_.size())) equations_.emplace_back(pos, label);
      if (echelon_.full_rank()) break;
    }
    probes_used_ = pos + 1;
  }
  if (!echelon_.full_rank()) throw AmbiguousError(echelon_.rank(), columns_);
}

DerivationDecomposition DerivationDecomposer::decompose(const LinearOperator& d) const {
  require_same_config(config_, d.config());
  std::map<std::size_t, AlgebraElement> images;
  auto image = [&](std::size_t pos) -> const AlgebraElement& {
    auto it = images.find(pos);
    if (it == images.end()) it = images.emplace(pos, d(window_[pos])).first;
    return it->second;
  };
  const std::vector<Rational> x = echelon_.solve([&](std::size_t source) {
    const auto& [pos, label] = equations_[source];
    return image(pos).coefficient(label);
  });

  std::size_t col = 0;
  AlgebraElement inner(config_);
  for (const auto& s : support_) inner.add_term(s, x[col++]);
  std::map<Index, Rational> c;
  for (Index p : outer_) c[p] = x[col++];
  Vector mu_values(config_->gamma().rank());
  for (const auto& h : hom_basis_) {
    const Rational& f = x[col++];
    for (std::size_t k = 0; k < h.size(); ++k) mu_values[k] += f * h[k];
  }
  DerivationDecomposition out{std::move(c), HomGamma(config_, std::move(mu_values)), std::move(inner), false};

  const LinearOperator recon = out.reconstruct();
  for (std::size_t pos = 0; pos < window_.size(); ++pos) {
    const AlgebraElement diff = image(pos) - recon(window_[pos]);
    images.erase(pos);
    if (diff.is_zero()) continue;
    const auto& [label, v] = *diff.terms().begin();
    const std::string witness = format_basis(*config_, window_[pos]);
    throw ResidualError(witness, "no decomposition matches at " + witness + ": residual coefficient " +
                                     format_rational(v) + " on " + format_basis(*config_, label));
  }
  out.residual_zero = true;
  return out;
}

DerivationDecomposition decompose_derivation(const LinearOperator& d, std::vector<BasisIndex> window,
                                             std::vector<BasisIndex> inner_support) {
  return DerivationDecomposer(d.config(), std::move(window), std::move(inner_support)).decompose(d);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Inner text of "name(...)" or nullopt.
std::optional<std::string> call_argument(const std::string& atom, const std::string& name) {
  if (atom.size() < name.size() + 2 || atom.compare(0, name.size() + 1, name + "(") != 0 || atom.back() != ')')
    return std::nullopt;
  return trim(std::string_view(atom).substr(name.size() + 1, atom.size() - name.size() - 2));
}

LinearOperator parse_atom(const ConfigPtr& config, const std::string& atom) {
  if (auto arg = call_argument(atom, "ad")) return ad(parse_element(config, *arg));
  if (auto arg = call_argument(atom, "dmu")) return d_mu(HomGamma(config, parse_rational_list(*arg)));
  if (auto arg = call_argument(atom, "dt")) return outer_partial_t(config, config->shape().parse_index(*arg));
  if (auto arg = call_argument(atom, "dstar")) return grading_operator(config, config->shape().parse_index(*arg));
  throw ParseError(0, "unknown operator term '" + atom + "'");
}

}  // namespace

LinearOperator parse_operator_spec(const ConfigPtr& config, const std::string& text) {
  std::vector<std::pair<bool, std::string>> terms;  // (negated, body)
  int depth = 0;
  bool negated = false;
  bool leading_sign = false;
  std::string current;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) throw ParseError(0, "unbalanced parentheses in operator expression");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      const std::string body = trim(current);
      if (!body.empty()) terms.emplace_back(negated, body);
      else if (!terms.empty() || leading_sign) throw ParseError(0, "dangling sign in operator expression");
      leading_sign = terms.empty();
      negated = (ch == '-');
      current.clear();
      continue;
    }
    current += ch;
  }
  if (depth != 0) throw ParseError(0, "unbalanced parentheses in operator expression");
  const std::string last = trim(current);
  if (last.empty()) throw ParseError(0, terms.empty() ? "empty operator expression" : "dangling sign in operator expression");
  terms.emplace_back(negated, last);

  std::optional<LinearOperator> out;
  for (const auto& [neg, body] : terms) {
    Rational scale = neg ? -1 : 1;
    std::string atom = body;
    const auto open = body.find('(');
    const auto star = body.find('*');
    if (star != std::string::npos && (open == std::string::npos || star < open)) {
      try {
        scale *= parse_rational(trim(std::string_view(body).substr(0, star)));
      } catch (const std::invalid_argument&) {
        throw ParseError(0, "bad coefficient in operator term '" + body + "'");
      }
      atom = trim(std::string_view(body).substr(star + 1));
    }
    LinearOperator term = parse_atom(config, atom);
    if (scale != 1) term = scale * term;
    out = out ? *out + term : term;
  }
  return *out;
}

}  // namespace contactlie
