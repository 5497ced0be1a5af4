#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "contactlie/cohomology.hpp"
#include "contactlie/derivations.hpp"
#include "contactlie/io.hpp"
#include "contactlie/suite.hpp"
#include "contactlie/table.hpp"
#include "contactlie/window.hpp"

using namespace contactlie;

namespace {

constexpr int kPass = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsageError = 2;

struct Common {
  std::string config_path;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  int radius = -1;
  bool oracle = false;
  std::string out_path;
};

ConfigPtr load(const Common& c) {
  if (c.config_path.empty()) throw CLI::RequiredError("--config");
  return parse_config_file(c.config_path);
}

// Writes to --out when given, stdout otherwise.
void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + c.out_path + "'");
  out << text;
}

std::string j0_name(J0Mode m) { return m == J0Mode::kZero ? "zero" : "naturals"; }

// A cocycle given as a table file or as "coboundary <functional file>".
// `labels` receives every monomial mentioned in the input.
Cocycle load_cocycle(const ConfigPtr& cfg, const std::vector<std::string>& spec, std::set<BasisIndex>& labels) {
  if (spec.size() == 2 && spec[0] == "coboundary") {
    auto values = parse_functional_text(cfg, read_file(spec[1]));
    for (const auto& [b, v] : values) labels.insert(b);
    return coboundary(LinearFunctional::from_map(cfg, std::move(values)));
  }
  if (spec.size() != 1) throw CLI::ValidationError("cocycle", "expected TABLE or 'coboundary FILE'");
  auto entries = parse_pair_table_text(cfg, read_file(spec[0]));
  for (const auto& [a, b, v] : entries) {
    labels.insert(a);
    labels.insert(b);
  }
  return Cocycle::from_table(cfg, entries);
}

std::vector<std::pair<BasisIndex, BasisIndex>> unordered_pairs(const std::vector<BasisIndex>& w) {
  std::vector<std::pair<BasisIndex, BasisIndex>> out;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) out.emplace_back(w[a], w[b]);
  return out;
}

int cmd_check_config(const Common& c) {
  const ConfigPtr cfg = load(c);
  std::ostringstream out;
  out << "ok\nell:";
  for (int v : cfg->shape().ell()) out << ' ' << v;
  out << "\nj0: " << j0_name(cfg->j0()) << "\ngamma rank: " << cfg->gamma().rank()
      << "\ngamma_0 nonzero: " << (cfg->gamma().has_zero_coordinate() ? "yes" : "no") << '\n';
  emit(c, out.str());
  return kPass;
}

int cmd_bracket(const Common& c, const std::string& lhs, const std::string& rhs) {
  const ConfigPtr cfg = load(c);
  const auto u = parse_element(cfg, lhs);
  const auto v = parse_element(cfg, rhs);
  const auto result = bracket_closed(u, v);
  emit(c, format_element(result) + "\n");
  if (c.oracle) {
    const auto check = bracket_operator(u, v);
    if (!(check == result)) {
      std::cerr << "oracle mismatch: operator form gives " << format_element(check) << '\n';
      return kPropertyFailure;
    }
    std::cerr << "oracle: agrees\n";
  }
  return kPass;
}

int cmd_mul(const Common& c, const std::string& lhs, const std::string& rhs) {
  const ConfigPtr cfg = load(c);
  emit(c, format_element(multiply(parse_element(cfg, lhs), parse_element(cfg, rhs))) + "\n");
  return kPass;
}

int cmd_table(const Common& c, const std::string& window_path) {
  const ConfigPtr cfg = load(c);
  std::vector<BasisIndex> window;
  if (!window_path.empty()) window = parse_window(cfg, read_file(window_path));
  else if (c.radius >= 0) window = enumerate_window(*cfg, c.radius);
  else throw CLI::ValidationError("table", "give --radius or --window");
  std::ostringstream out;
  write_csv(out, structure_table(cfg, window));
  emit(c, out.str());
  return kPass;
}

int cmd_suite(const Common& c, std::size_t triples, std::size_t functionals, bool corrupt) {
  const ConfigPtr cfg = load(c);
  SuiteOptions opt;
  opt.seed = c.seed;
  opt.pairs = c.samples;
  opt.triples = triples;
  opt.functionals = functionals;
  if (corrupt) opt.bracket = corrupted_bracket(cfg);
  const SuiteReport report = run_suite(cfg, opt);
  emit(c, render_report(cfg, opt, report));
  std::cerr << "elapsed: " << report.seconds << " s\n";
  return report.ok() ? kPass : kPropertyFailure;
}

int cmd_deriv_check(const Common& c, const std::string& spec) {
  const ConfigPtr cfg = load(c);
  const LinearOperator d = parse_operator_spec(cfg, spec);
  Sampler s(cfg, c.seed);
  std::vector<std::pair<BasisIndex, BasisIndex>> pairs;
  for (std::size_t k = 0; k < c.samples; ++k) {
    BasisIndex a = s.basis();
    pairs.emplace_back(std::move(a), s.basis());
  }
  const auto rep = check_derivation(d, pairs);
  std::ostringstream out;
  out << "operator: " << d.tag() << '\n';
  if (rep.ok()) {
    out << "PASS " << rep.checked << '/' << rep.checked << '\n';
  } else {
    out << "FAIL " << rep.failed << '/' << rep.checked << '\n';
    const auto& f = rep.failures.front();
    out << "witness: u=" << format_basis(*cfg, f.u) << " v=" << format_basis(*cfg, f.v) << '\n'
        << "  D[u,v] = " << format_element(f.lhs) << "\n  [Du,v]+[u,Dv] = " << format_element(f.rhs) << '\n';
  }
  emit(c, out.str());
  return rep.ok() ? kPass : kPropertyFailure;
}

int cmd_deriv_decompose(const Common& c, const std::string& spec, int support_radius) {
  const ConfigPtr cfg = load(c);
  const LinearOperator d = parse_operator_spec(cfg, spec);
  const int window_radius = c.radius >= 0 ? c.radius : support_radius + 1;
  const DerivationDecomposer dec(cfg, enumerate_window(*cfg, window_radius), enumerate_window(*cfg, support_radius));
  const auto r = dec.decompose(d);
  std::ostringstream out;
  out << "outer:";
  bool any = false;
  for (const auto& [p, v] : r.c) {
    if (v == 0) continue;
    out << " dt(" << cfg->shape().name(p) << ")=" << format_rational(v);
    any = true;
  }
  out << (any ? "" : " 0") << "\nmu:";
  for (const auto& v : r.mu.values()) out << ' ' << format_rational(v);
  out << "\ninner: " << format_element(r.inner) << "\nunknowns: " << dec.unknowns()
      << "\nwindow elements used: " << dec.probes_used() << '\n';
  emit(c, out.str());
  return kPass;
}

int cmd_cocycle_check(const Common& c, const std::vector<std::string>& spec) {
  const ConfigPtr cfg = load(c);
  std::set<BasisIndex> labels;
  const Cocycle psi = load_cocycle(cfg, spec, labels);
  std::vector<BasisIndex> pool(labels.begin(), labels.end());
  if (c.radius >= 0)
    for (auto& b : enumerate_window(*cfg, c.radius)) pool.push_back(std::move(b));
  if (pool.empty()) pool.push_back(BasisIndex{cfg->gamma().zero(), cfg->zero_exponents()});

  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::pair<BasisIndex, BasisIndex>> pairs;
  std::vector<std::tuple<BasisIndex, BasisIndex, BasisIndex>> triples;
  for (std::size_t k = 0; k < c.samples; ++k) {
    const std::size_t a = pick(rng), b = pick(rng), d = pick(rng);
    pairs.emplace_back(pool[a], pool[b]);
    triples.emplace_back(pool[a], pool[b], pool[d]);
  }
  const auto rep = check_cocycle(psi, pairs, triples);
  std::ostringstream out;
  out << "skew: " << (rep.skew_failed ? "FAIL " : "PASS ") << rep.pairs_checked - rep.skew_failed << '/'
      << rep.pairs_checked << '\n'
      << "jacobi: " << (rep.jacobi_failed ? "FAIL " : "PASS ") << rep.triples_checked - rep.jacobi_failed << '/'
      << rep.triples_checked << '\n';
  if (!rep.ok()) {
    const auto& f = rep.failures.front();
    out << "witness:";
    for (const auto& b : f.at) out << ' ' << format_basis(*cfg, b);
    out << " -> " << format_rational(f.value) << '\n';
  }
  emit(c, out.str());
  return rep.ok() ? kPass : kPropertyFailure;
}

int cmd_cocycle_trivialize(const Common& c, const std::vector<std::string>& spec) {
  const ConfigPtr cfg = load(c);
  std::set<BasisIndex> labels;
  const Cocycle psi = load_cocycle(cfg, spec, labels);
  const Trivialization t = trivialize(psi);
  std::ostringstream out;
  if (t.kind == TrivializerCase::kB) {
    out << "# closed form\n";
  } else {
    out << "# recursive, pivot " << (t.pivot == 0 ? std::string("1") : cfg->shape().name(t.pivot))
        << (t.derived_by_analogy ? " (derived-by-analogy)" : "") << '\n';
  }
  const int radius = c.radius >= 0 ? c.radius : 2;
  for (const auto& [b, v] : t.f.restrict_to(enumerate_window(*cfg, radius)))
    out << format_basis(*cfg, b) << ' ' << format_rational(v) << '\n';
  emit(c, out.str());
  return kPass;
}

int cmd_cocycle_verify(const Common& c, const std::vector<std::string>& spec, const std::string& functional_path) {
  const ConfigPtr cfg = load(c);
  std::set<BasisIndex> labels;
  const Cocycle psi = load_cocycle(cfg, spec, labels);
  const LinearFunctional f = LinearFunctional::from_map(cfg, parse_functional_text(cfg, read_file(functional_path)));
  const int radius = c.radius >= 0 ? c.radius : 1;
  const auto rep = verify_trivialization(psi, f, unordered_pairs(enumerate_window(*cfg, radius)));
  std::ostringstream out;
  if (rep.ok()) {
    out << "PASS " << rep.checked << '/' << rep.checked << '\n';
  } else {
    const auto& w = rep.failures.front();
    out << "FAIL " << rep.failed << '/' << rep.checked << '\n'
        << "witness: u=" << format_basis(*cfg, w.u) << " v=" << format_basis(*cfg, w.v)
        << " psi=" << format_rational(w.psi_value) << " f([u,v])=" << format_rational(w.f_value) << '\n';
  }
  emit(c, out.str());
  return rep.ok() ? kPass : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in contact Lie algebras K(ell, sigma, Gamma, J)"};
  app.fallthrough();
  app.require_subcommand(1);
  Common c;
  app.add_option("--config", c.config_path, "Algebra configuration file");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--samples", c.samples, "Number of sampled pairs (or triples)");
  app.add_option("--radius", c.radius, "Window radius")->check(CLI::NonNegativeNumber);
  app.add_flag("--oracle", c.oracle, "Cross-check bracket against the operator form");
  app.add_option("--out", c.out_path, "Output file (default: stdout)");

  std::function<int()> action;

  app.add_subcommand("check-config", "Validate a configuration")->callback([&] {
    action = [&] { return cmd_check_config(c); };
  });

  std::string lhs, rhs;
  auto* br = app.add_subcommand("bracket", "Contact bracket of two elements");
  br->add_option("lhs", lhs)->required();
  br->add_option("rhs", rhs)->required();
  br->callback([&] { action = [&] { return cmd_bracket(c, lhs, rhs); }; });

  auto* mul = app.add_subcommand("mul", "Commutative product of two elements");
  mul->add_option("lhs", lhs)->required();
  mul->add_option("rhs", rhs)->required();
  mul->callback([&] { action = [&] { return cmd_mul(c, lhs, rhs); }; });

  std::string window_path;
  auto* table = app.add_subcommand("table", "Structure constants on a window as CSV");
  table->add_option("--window", window_path, "File with one basis literal per line");
  table->callback([&] { action = [&] { return cmd_table(c, window_path); }; });

  std::size_t triples = 100, functionals = 3;
  bool corrupt = false;
  auto* suite = app.add_subcommand("suite", "Seeded property suite");
  suite->add_option("--triples", triples, "Jacobi triples");
  suite->add_option("--functionals", functionals, "Random functionals and homomorphisms");
  suite->add_flag("--corrupt-bracket", corrupt, "Run against a deliberately broken bracket");
  suite->callback([&] { action = [&] { return cmd_suite(c, triples, functionals, corrupt); }; });

  std::string spec;
  int support_radius = 1;
  auto* deriv = app.add_subcommand("deriv", "Derivations");
  deriv->require_subcommand(1);
  auto* dcheck = deriv->add_subcommand("check", "Leibniz rule on sampled pairs");
  dcheck->add_option("operator", spec)->required();
  dcheck->callback([&] { action = [&] { return cmd_deriv_check(c, spec); }; });
  auto* ddec = deriv->add_subcommand("decompose", "Split into outer, d_mu and inner parts");
  ddec->add_option("operator", spec)->required();
  ddec->add_option("--support-radius", support_radius, "Radius of the inner support")->check(CLI::NonNegativeNumber);
  ddec->callback([&] { action = [&] { return cmd_deriv_decompose(c, spec, support_radius); }; });

  std::vector<std::string> cocycle_spec;
  std::string functional_path;
  auto* cocycle = app.add_subcommand("cocycle", "2-cocycles");
  cocycle->require_subcommand(1);
  auto* ccheck = cocycle->add_subcommand("check", "Skew-symmetry and cyclic identity");
  ccheck->add_option("cocycle", cocycle_spec, "TABLE or 'coboundary FILE'")->required();
  ccheck->callback([&] { action = [&] { return cmd_cocycle_check(c, cocycle_spec); }; });
  auto* ctriv = cocycle->add_subcommand("trivialize", "Find f with psi = f o bracket");
  ctriv->add_option("cocycle", cocycle_spec, "TABLE or 'coboundary FILE'")->required();
  ctriv->callback([&] { action = [&] { return cmd_cocycle_trivialize(c, cocycle_spec); }; });
  auto* cver = cocycle->add_subcommand("verify", "Compare psi with f o bracket on a window");
  cver->add_option("cocycle", cocycle_spec, "TABLE or 'coboundary FILE'")->required();
  cver->add_option("--functional", functional_path, "Functional file")->required();
  cver->callback([&] { action = [&] { return cmd_cocycle_verify(c, cocycle_spec, functional_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsageError;
  }

  try {
    return action();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const ResidualError& e) {
    std::cerr << "residual: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const AmbiguousError& e) {
    std::cerr << "ambiguous: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsageError;
}
