#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hurwitz/cli.hpp"
#include "hurwitz/dsl.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/report.hpp"
#include "hurwitz/scenarios.hpp"
#include "hurwitz/series.hpp"

namespace py = pybind11;
using namespace hurwitz;

namespace {

std::string check_json(const std::string& property, const std::string& spec, long degree, long trunc,
                       const std::string& mode, std::uint64_t samples, std::uint64_t seed,
                       std::optional<std::uint64_t> budget) {
  auto ring = ring_from_spec(spec);
  CheckOptions o;
  o.degree = degree;
  o.trunc = trunc;
  o.mode = parse_mode(mode);
  o.samples = samples;
  o.seed = seed;
  if (budget) o.budget = *budget;
  Report r;
  r.ring = ring->spec();
  r.add(property, check_property(property, ring, o));
  return emit_report(r, Format::json);
}

std::string product(const std::string& spec, const std::string& f, const std::string& g, const std::string& kind) {
  auto ring = ring_from_spec(spec);
  auto a = parse_coeffs(*ring, f);
  auto b = parse_coeffs(*ring, g);
  if (kind == "hurwitz") return to_string(hpoly_mul(HurwitzPoly(ring, a), HurwitzPoly(ring, b)));
  if (kind == "ordinary") return to_string(opoly_mul(OrdinaryPoly(ring, a), OrdinaryPoly(ring, b)));
  throw DomainError("kind must be hurwitz or ordinary");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hurwitz series rings: ring specs, property checks and scenarios";
  m.attr("__version__") = std::string(kVersion);

  auto base = py::register_exception<Error>(m, "HurwitzError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<LiteralError>(m, "LiteralError", base.ptr());
  py::register_exception<UnknownScenario>(m, "UnknownScenario", base.ptr());
  py::register_exception<CapabilityMissing>(m, "CapabilityMissing", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<HypothesisNotEstablished>(m, "HypothesisNotEstablished", base.ptr());

  m.def("canonical_spec", [](const std::string& text) { return print_ring_spec(parse_ring_spec(text)); },
        py::arg("text"), "Canonical form of a ring spec.");
  m.def(
      "ring_info",
      [](const std::string& text) {
        auto r = ring_from_spec(text);
        py::dict d;
        d["spec"] = r->spec();
        d["characteristic"] = r->characteristic();
        d["size"] = r->size();
        return d;
      },
      py::arg("spec"));
  m.def("property_names", &property_names);
  m.def("check_json", &check_json, py::arg("property"), py::arg("spec"), py::arg("degree") = 1,
        py::arg("trunc") = 0, py::arg("mode") = "directed", py::arg("samples") = 10000, py::arg("seed") = 0,
        py::arg("budget") = py::none(), py::call_guard<py::gil_scoped_release>(),
        "Runs one property check and returns the JSON report.");
  m.def("product", &product, py::arg("spec"), py::arg("f"), py::arg("g"), py::arg("kind") = "hurwitz",
        "Product of two polynomials written as <c0,c1,...>.");
  m.def("scenario_ids", &scenario_ids);
  m.def("scenario_summary", [](const std::string& id) { return scenario_summary(id); }, py::arg("id"));
  m.def(
      "run_scenario_json",
      [](const std::string& id, std::optional<std::uint64_t> seed) {
        return emit_report(run_scenario(id, seed), Format::json);
      },
      py::arg("id"), py::arg("seed") = py::none(), py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
