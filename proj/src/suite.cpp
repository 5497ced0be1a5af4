#include "contactlie/suite.hpp"

#include <chrono>
#include <sstream>

#include "contactlie/cohomology.hpp"
#include "contactlie/derivations.hpp"
#include "contactlie/io.hpp"
#include "contactlie/window.hpp"

namespace contactlie {

namespace {

using Pairs = std::vector<std::pair<BasisIndex, BasisIndex>>;

// Independent stream per property so adding one does not shift the others.
Sampler stream(const ConfigPtr& config, std::uint64_t seed, std::uint64_t property) {
  return Sampler(config, seed * 1000003ULL + property);
}

Pairs sample_pairs(Sampler& s, std::size_t n) {
  Pairs out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    BasisIndex a = s.basis();
    out.emplace_back(std::move(a), s.basis());
  }
  return out;
}

std::string pair_witness(const AlgebraConfig& c, const BasisIndex& a, const BasisIndex& b) {
  return "u=" + format_basis(c, a) + " v=" + format_basis(c, b);
}

PropertyResult named(std::string name) {
  PropertyResult r;
  r.name = std::move(name);
  return r;
}

void record(PropertyResult& r, bool ok, const std::string& witness) {
  ++r.checked;
  if (ok) return;
  if (r.failed++ == 0) r.witness = witness;
}

// Difference between the bracket with the constant 2 of the 0-direction terms
// replaced by 3 and the true bracket.
void weight_shift(const BasisIndex& a, const BasisIndex& b, const Rational& scale, AlgebraElement& out) {
  const GroupElement ab = a.alpha + b.alpha;
  const ExponentVector ij = a.exps + b.exps;
  const Rational c5 = b.alpha[0] - a.alpha[0];
  if (c5 != 0) out.add_term(BasisIndex{ab, ij}, scale * c5);
  const std::int64_t c6 = b.exps[0] - a.exps[0];
  if (c6 != 0) out.add_term(BasisIndex{ab, ij.shifted(0, -1)}, scale * Rational(static_cast<long>(c6)));
}

}  // namespace

bool SuiteReport::ok() const {
  for (const auto& p : properties)
    if (p.failed) return false;
  return true;
}

BracketFn corrupted_bracket(const ConfigPtr& config) {
  return [config = config](const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement out = bracket_closed(u, v);
    for (const auto& [a, ca] : u.terms())
      for (const auto& [b, cb] : v.terms()) weight_shift(a, b, ca * cb, out);
    return out;
  };
}

PropertyResult check_eigen_relations(const ConfigPtr& config, const std::vector<BasisIndex>& labels) {
  PropertyResult r = named("eigen-relations");
  const Shape& s = config->shape();
  const auto block6 = s.blocks(6, 6);
  if (block6.empty()) {
    r.skipped = true;
    r.note = "block I6 is empty";
    return r;
  }
  const GroupElement zero = config->gamma().zero();
  for (Index p : block6) {
    const Index q = s.bar(p);
    ExponentVector pair = config->unit_exponents(p);
    pair[q] = 1;
    const auto t_pair = AlgebraElement::basis(config, BasisIndex{zero, pair});
    const auto t_p2 = AlgebraElement::basis(config, BasisIndex{zero, config->unit_exponents(p, 2)});
    const auto t_q2 = AlgebraElement::basis(config, BasisIndex{zero, config->unit_exponents(q, 2)});
    for (const auto& b : labels) {
      const auto x = AlgebraElement::basis(config, b);
      const auto ip = static_cast<long>(b.exps[p]);
      const auto iq = static_cast<long>(b.exps[q]);
      const bool first = bracket_closed(t_pair, x) == Rational(iq - ip) * x;
      const bool second = bracket_closed(t_q2, bracket_closed(t_p2, x)) == Rational(-4 * (ip + 1) * iq) * x;
      record(r, first && second, "r=" + s.name(p) + " x=" + format_basis(*config, b));
    }
  }
  return r;
}

SuiteReport run_suite(const ConfigPtr& config, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const AlgebraConfig& cfg = *config;
  const BracketFn& br = options.bracket;
  SuiteReport report;

  {
    Sampler s = stream(config, options.seed, 1);
    PropertyResult r = named("antisymmetry");
    for (const auto& [a, b] : sample_pairs(s, options.pairs)) {
      const auto u = AlgebraElement::basis(config, a), v = AlgebraElement::basis(config, b);
      record(r, (br(u, v) + br(v, u)).is_zero(), pair_witness(cfg, a, b));
    }
    report.properties.push_back(std::move(r));
  }
  {
    Sampler s = stream(config, options.seed, 2);
    PropertyResult r = named("jacobi");
    for (std::size_t k = 0; k < options.triples; ++k) {
      const BasisIndex a = s.basis(), b = s.basis(), c = s.basis();
      const auto u = AlgebraElement::basis(config, a), v = AlgebraElement::basis(config, b),
                 w = AlgebraElement::basis(config, c);
      const auto sum = br(br(u, v), w) + br(br(v, w), u) + br(br(w, u), v);
      record(r, sum.is_zero(), pair_witness(cfg, a, b) + " w=" + format_basis(cfg, c));
    }
    report.properties.push_back(std::move(r));
  }
  {
    Sampler s = stream(config, options.seed, 3);
    PropertyResult r = named("oracle-equivalence");
    for (const auto& [a, b] : sample_pairs(s, options.pairs)) {
      const auto u = AlgebraElement::basis(config, a), v = AlgebraElement::basis(config, b);
      record(r, br(u, v) == bracket_operator(u, v), pair_witness(cfg, a, b));
    }
    report.properties.push_back(std::move(r));
  }
  {
    Sampler s = stream(config, options.seed, 4);
    PropertyResult r = named("derivation-law");
    std::vector<LinearOperator> ops;
    const auto basis = hom_prime_basis(cfg);
    for (std::size_t k = 0; k < options.functionals; ++k) {
      Vector mu(cfg.gamma().rank());
      for (const auto& h : basis) {
        const Rational f = s.rational();
        for (std::size_t j = 0; j < mu.size(); ++j) mu[j] += f * h[j];
      }
      ops.push_back(d_mu(HomGamma(config, mu)));
    }
    for (Index p : outer_indices(cfg)) ops.push_back(outer_partial_t(config, p));
    const Pairs pairs = sample_pairs(s, options.pairs);
    for (const auto& d : ops) {
      const auto rep = check_derivation(d, pairs, br);
      r.checked += rep.checked;
      if (rep.failed && !r.failed)
        r.witness = d.tag() + " " + pair_witness(cfg, rep.failures.front().u, rep.failures.front().v);
      r.failed += rep.failed;
    }
    r.note = std::to_string(ops.size()) + " operators";
    report.properties.push_back(std::move(r));
  }
  {
    Sampler s = stream(config, options.seed, 5);
    PropertyResult r = named("sigma-identity");
    const auto pivots = cfg.shape().blocks(1, 3);
    if (pivots.empty()) {
      r.skipped = true;
      r.note = "blocks I1..I3 are empty";
    } else {
      std::vector<BasisIndex> labels;
      for (std::size_t k = 0; k < options.pairs; ++k) labels.push_back(s.basis());
      for (Index p : pivots) {
        const auto rep = check_sigma_identity(config, p, labels);
        r.checked += rep.checked;
        if (rep.failed && !r.failed) r.witness = "p=" + cfg.shape().name(p) + " x=" + format_basis(cfg, rep.failures.front().at);
        r.failed += rep.failed;
      }
    }
    report.properties.push_back(std::move(r));
  }
  {
    Sampler s = stream(config, options.seed, 6);
    std::vector<BasisIndex> labels;
    for (std::size_t k = 0; k < options.pairs; ++k) labels.push_back(s.basis());
    report.properties.push_back(check_eigen_relations(config, labels));
  }
  {
    Sampler s = stream(config, options.seed, 7);
    PropertyResult r = named("round-trip");
    try {
      for (std::size_t k = 0; k < options.functionals; ++k) {
        std::map<BasisIndex, Rational> g;
        for (int j = 0; j < 20; ++j) {
          BasisIndex b = s.basis();
          Rational v = s.rational();
          if (v != 0) g[std::move(b)] = std::move(v);
        }
        const Cocycle psi = coboundary(LinearFunctional::from_map(config, std::move(g)));
        const Trivialization t = trivialize(psi);
        if (r.note.empty()) {
          r.note = t.kind == TrivializerCase::kB ? "closed form"
                   : "recursive, pivot " + (t.pivot == 0 ? std::string("1") : cfg.shape().name(t.pivot)) +
                         (t.derived_by_analogy ? ", derived-by-analogy" : "");
        }
        const auto rep = verify_trivialization(psi, t.f, sample_pairs(s, options.pairs));
        r.checked += rep.checked;
        if (rep.failed && !r.failed) r.witness = pair_witness(cfg, rep.failures.front().u, rep.failures.front().v);
        r.failed += rep.failed;
      }
    } catch (const TrivializationError& e) {
      r.skipped = true;
      r.note = e.what();
    }
    report.properties.push_back(std::move(r));
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render_report(const ConfigPtr& config, const SuiteOptions& options, const SuiteReport& report) {
  std::ostringstream out;
  out << "ell:";
  for (int v : config->shape().ell()) out << ' ' << v;
  out << "\nj0: " << (config->j0() == J0Mode::kZero ? "zero" : "naturals") << '\n';
  out << "seed: " << options.seed << "\npairs: " << options.pairs << "\ntriples: " << options.triples
      << "\nfunctionals: " << options.functionals << '\n';
  for (const auto& p : report.properties) {
    out << p.name << ": ";
    if (p.skipped) out << "SKIP";
    else if (p.failed) out << "FAIL " << p.failed << '/' << p.checked;
    else out << "PASS " << p.checked << '/' << p.checked;
    if (!p.note.empty()) out << " (" << p.note << ')';
    out << '\n';
    if (p.failed) out << "  witness: " << p.witness << '\n';
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace contactlie
