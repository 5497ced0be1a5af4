#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "contactlie/cohomology.hpp"
#include "contactlie/derivations.hpp"
#include "contactlie/io.hpp"
#include "contactlie/suite.hpp"
#include "contactlie/table.hpp"
#include "contactlie/window.hpp"

namespace py = pybind11;
using namespace contactlie;

namespace {

// Rationals cross the boundary as fractions.Fraction; anything whose str()
// parses (int, Fraction, "p/q") is accepted on the way in.
py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_rational(r));
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::dict element_terms(const AlgebraElement& e) {
  py::dict out;
  for (const auto& [b, c] : e.terms()) out[py::str(format_basis(*e.config(), b))] = to_py(c);
  return out;
}

// pybind11 holders cannot point to const, so configurations travel in a handle.
struct ConfigHandle {
  ConfigPtr ptr;
};

using Pairs = std::vector<std::pair<BasisIndex, BasisIndex>>;

Pairs sampled_pairs(const ConfigPtr& cfg, std::uint64_t seed, std::size_t n) {
  Sampler s(cfg, seed);
  Pairs out;
  for (std::size_t k = 0; k < n; ++k) {
    BasisIndex a = s.basis();
    out.emplace_back(std::move(a), s.basis());
  }
  return out;
}

Pairs unordered_window_pairs(const ConfigPtr& cfg, int radius) {
  const auto w = enumerate_window(*cfg, radius);
  Pairs out;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) out.emplace_back(w[a], w[b]);
  return out;
}

std::map<BasisIndex, Rational> functional_from_dict(const ConfigPtr& cfg, const py::dict& values) {
  std::map<BasisIndex, Rational> out;
  for (const auto& [k, v] : values) {
    const AlgebraElement e = parse_element(cfg, k.cast<std::string>());
    if (e.size() != 1) throw ParseError(0, "functional keys must be single monomials");
    const auto& [label, scale] = *e.terms().begin();
    out[label] += scale * from_py(v);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_contactlie, m) {
  m.doc() = "Exact computations in contact Lie algebras";

  static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<TrivializationError> triv_error(m, "TrivializationError", PyExc_RuntimeError);
  static py::exception<DecompositionError> decomp_error(m, "DecompositionError", PyExc_RuntimeError);
  static py::exception<ResidualError> residual_error(m, "ResidualError", decomp_error.ptr());
  static py::exception<AmbiguousError> ambiguous_error(m, "AmbiguousError", decomp_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      py::object err = py::handle(config_error.ptr())(e.what());
      err.attr("constraint") = e.constraint();
      PyErr_SetObject(config_error.ptr(), err.ptr());
    } catch (const ParseError& e) {
      py::object err = py::handle(parse_error.ptr())(e.what());
      err.attr("line") = e.line();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    } catch (const TrivializationError& e) {
      triv_error(e.what());
    } catch (const ResidualError& e) {
      py::object err = py::handle(residual_error.ptr())(e.what());
      err.attr("witness") = e.witness();
      PyErr_SetObject(residual_error.ptr(), err.ptr());
    } catch (const AmbiguousError& e) {
      ambiguous_error(e.what());
    } catch (const DecompositionError& e) {
      decomp_error(e.what());
    }
  });

  py::class_<ConfigHandle>(m, "Config")
      .def_static("from_text", [](const std::string& text) { return ConfigHandle{parse_config_text(text)}; })
      .def_static("from_file", [](const std::string& path) { return ConfigHandle{parse_config_file(path)}; })
      .def_property_readonly("ell", [](const ConfigHandle& c) { return c.ptr->shape().ell(); })
      .def_property_readonly("j0", [](const ConfigHandle& c) {
        return std::string(c.ptr->j0() == J0Mode::kZero ? "zero" : "naturals");
      })
      .def_property_readonly("rank", [](const ConfigHandle& c) { return c.ptr->shape().rank(); })
      .def_property_readonly("gamma_rank", [](const ConfigHandle& c) { return c.ptr->gamma().rank(); });

  py::class_<AlgebraElement>(m, "Element")
      .def(py::init([](const ConfigHandle& c, const std::string& text) { return parse_element(c.ptr, text); }))
      .def("terms", &element_terms)
      .def("is_zero", &AlgebraElement::is_zero)
      .def("__add__", [](const AlgebraElement& a, const AlgebraElement& b) { return a + b; })
      .def("__sub__", [](const AlgebraElement& a, const AlgebraElement& b) { return a - b; })
      .def("__neg__", [](const AlgebraElement& a) { return -a; })
      .def("__rmul__", [](const AlgebraElement& a, const py::object& s) { return from_py(s) * a; })
      .def("__mul__", [](const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); })
      .def("__eq__", [](const AlgebraElement& a, const AlgebraElement& b) { return a == b; })
      .def("__str__", &format_element)
      .def("__repr__", [](const AlgebraElement& a) { return "Element('" + format_element(a) + "')"; });

  m.def("bracket", [](const AlgebraElement& u, const AlgebraElement& v) { return bracket_closed(u, v); },
        "Contact bracket through the closed form.");
  m.def("bracket_operator", [](const AlgebraElement& u, const AlgebraElement& v) { return bracket_operator(u, v); },
        "Contact bracket evaluated from the operator definition.");

  m.def(
      "window", [](const ConfigHandle& h, int radius) {
        const ConfigPtr& c = h.ptr;
        std::vector<std::string> out;
        for (const auto& b : enumerate_window(*c, radius)) out.push_back(format_basis(*c, b));
        return out;
      },
      py::arg("config"), py::arg("radius"));

  m.def(
      "structure_table",
      [](const ConfigHandle& h, const std::vector<std::string>& window) {
        const ConfigPtr& c = h.ptr;
        std::vector<BasisIndex> labels;
        for (const auto& w : window) labels.push_back(parse_basis(c, w));
        std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
        for (const auto& r : structure_table(c, labels)) out.emplace_back(r.lhs, r.rhs, r.result, r.coefficient);
        return out;
      },
      py::arg("config"), py::arg("window"));
  m.def(
      "table_csv",
      [](const ConfigHandle& h, const std::vector<std::string>& window) {
        const ConfigPtr& c = h.ptr;
        std::vector<BasisIndex> labels;
        for (const auto& w : window) labels.push_back(parse_basis(c, w));
        std::ostringstream out;
        write_csv(out, structure_table(c, labels));
        return out.str();
      },
      py::arg("config"), py::arg("window"));

  m.def(
      "run_suite",
      [](const ConfigHandle& h, std::uint64_t seed, std::size_t pairs, std::size_t triples, std::size_t functionals,
         bool corrupt) {
        const ConfigPtr& c = h.ptr;
        SuiteOptions o;
        o.seed = seed;
        o.pairs = pairs;
        o.triples = triples;
        o.functionals = functionals;
        if (corrupt) o.bracket = corrupted_bracket(c);
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(c, o);
        }
        return py::make_tuple(r.ok(), render_report(c, o, r));
      },
      py::arg("config"), py::arg("seed") = 1, py::arg("pairs") = 300, py::arg("triples") = 100,
      py::arg("functionals") = 3, py::arg("corrupt") = false,
      "Returns (ok, report text); the text is deterministic for a fixed seed.");

  m.def(
      "check_derivation",
      [](const ConfigHandle& h, const std::string& spec, std::size_t samples, std::uint64_t seed) {
        const ConfigPtr& c = h.ptr;
        const auto r = check_derivation(parse_operator_spec(c, spec), sampled_pairs(c, seed, samples));
        return py::make_tuple(r.checked, r.failed);
      },
      py::arg("config"), py::arg("operator"), py::arg("samples") = 200, py::arg("seed") = 1,
      "Leibniz rule on sampled pairs; returns (checked, failed).");

  m.def(
      "decompose",
      [](const ConfigHandle& h, const std::string& spec, int support_radius, int window_radius) {
        const ConfigPtr& c = h.ptr;
        if (window_radius < 0) window_radius = support_radius + 1;
        const auto d = decompose_derivation(parse_operator_spec(c, spec), enumerate_window(*c, window_radius),
                                            enumerate_window(*c, support_radius));
        py::dict outer;
        for (const auto& [p, v] : d.c) outer[py::str(c->shape().name(p))] = to_py(v);
        py::list mu;
        for (const auto& v : d.mu.values()) mu.append(to_py(v));
        py::dict out;
        out["outer"] = outer;
        out["mu"] = mu;
        out["inner"] = format_element(d.inner);
        return out;
      },
      py::arg("config"), py::arg("operator"), py::arg("support_radius") = 1, py::arg("window_radius") = -1,
      "Splits a derivation into outer dt terms, d_mu and ad(inner).");

  m.def(
      "trivialize_coboundary",
      [](const ConfigHandle& h, const py::dict& g, int radius) {
        const ConfigPtr& c = h.ptr;
        const Cocycle psi = coboundary(LinearFunctional::from_map(c, functional_from_dict(c, g)));
        const Trivialization t = trivialize(psi);
        py::dict values;
        for (const auto& [b, v] : t.f.restrict_to(enumerate_window(*c, radius)))
          values[py::str(format_basis(*c, b))] = to_py(v);
        return py::make_tuple(t.kind == TrivializerCase::kA ? "A" : "B", values);
      },
      py::arg("config"), py::arg("functional"), py::arg("radius") = 2,
      "Trivializes psi_g for a finitely supported g; returns (case, nonzero values of f on the window).");

  m.def(
      "verify_coboundary",
      [](const ConfigHandle& h, const py::dict& g, const py::dict& f, int radius) {
        const ConfigPtr& c = h.ptr;
        const Cocycle psi = coboundary(LinearFunctional::from_map(c, functional_from_dict(c, g)));
        const auto r = verify_trivialization(psi, LinearFunctional::from_map(c, functional_from_dict(c, f)),
                                             unordered_window_pairs(c, radius));
        return py::make_tuple(r.checked, r.failed);
      },
      py::arg("config"), py::arg("g"), py::arg("f"), py::arg("radius") = 1,
      "Compares psi_g(u, v) with f([u, v]) on window pairs; returns (checked, failed).");
}
