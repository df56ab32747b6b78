// Python module: JSON-in / JSON-out wrappers around the problem layer.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invh11/report.hpp"

namespace py = pybind11;
using namespace invh11;

namespace {

OptionsSpec overrides(std::optional<std::string> backend, std::optional<double> tolerance,
                      std::optional<std::string> b_minus) {
  OptionsSpec o;
  o.backend = std::move(backend);
  o.tolerance = tolerance;
  o.b_minus = std::move(b_minus);
  return o;
}

std::string h11(const std::string& text, std::optional<std::string> backend, std::optional<double> tolerance,
                std::optional<std::string> b_minus) {
  ProblemSpec spec = parse_problem(text);
  ResolvedStructure s = resolve_structure(spec.structure);
  if (!spec.metric) throw ProblemError("/metric", "a metric is required");
  DecisionOptions opt = decision_options(spec.options, overrides(std::move(backend), tolerance, std::move(b_minus)));
  MetricParams m = spec.metric->params();
  py::gil_scoped_release release;
  try {
    return decision_to_json(decide_h11(s.lie, s.coframe, m, opt, s.entry_ptr())).dump();
  } catch (const BackendDisagreement& e) {
    // the Python layer raises with both verdicts attached
    json out = decision_to_json(e.report());
    out["backend_disagreement"] = e.what();
    return out.dump();
  }
}

std::string ak_scan(const std::string& text) {
  ResolvedStructure s = resolve_structure(parse_problem(text).structure);
  json out = {{"almost_kahler", almost_kahler_to_json(almost_kahler_feasible(s.lie, s.coframe))},
              {"symplectic", symplectic_to_json(symplectic_feasible(s.lie))}};
  return out.dump();
}

std::string sweep(const std::string& text, std::optional<std::string> backend, std::optional<double> tolerance,
                  unsigned threads) {
  ProblemSpec spec = parse_problem(text);
  if (!spec.sweep) throw ProblemError("/sweep", "a sweep grid is required");
  ResolvedStructure s = resolve_structure(spec.structure);
  DecisionOptions opt = decision_options(spec.options, overrides(std::move(backend), tolerance, std::nullopt));
  SweepResult r;
  try {
    py::gil_scoped_release release;
    r = run_sweep(s, *spec.sweep, opt, threads);
  } catch (const BackendDisagreement& e) {
    json out = decision_to_json(e.report());
    out["backend_disagreement"] = e.what();
    return out.dump();
  }
  json re = json::array(), im = json::array(), cells = json::array();
  for (const auto& x : r.u_re) re.push_back(to_string(x));
  for (const auto& x : r.u_im) im.push_back(to_string(x));
  for (const auto& row : r.cells) {
    json jr = json::array();
    for (const auto& c : row) jr.push_back(c.valid ? json(c.delta) : json("x"));
    cells.push_back(jr);
  }
  return json{{"u_re", re}, {"u_im", im}, {"delta", cells}, {"csv", sweep_csv(r)}}.dump();
}

std::string catalog_show(const std::string& name, const std::string& params_json) {
  json doc = {{"catalog", {{"name", name}, {"params", json::parse(params_json)}}}};
  ProblemSpec spec = parse_problem_json(doc);
  ResolvedStructure s = resolve_structure(spec.structure);
  json out = catalog_entry_to_json(*s.entry);
  out["tables"] = operator_tables_to_json(s);
  out["cohomology"] = cohomology_to_json(ce_cohomology(s.lie));
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_invh11, m) {
  m.doc() = "Dolbeault harmonic (1,1)-forms on left-invariant almost Hermitian 4-manifolds";
  m.attr("__version__") = kVersion;

  py::register_exception<ProblemError>(m, "ProblemError", PyExc_ValueError);

  m.def("catalog_list", [] { return catalog_listing_to_json().dump(); });
  m.def("catalog_show", &catalog_show, py::arg("name"), py::arg("params_json") = "{}");
  m.def("normalize", [](const std::string& text) { return problem_to_json(parse_problem(text)).dump(); },
        py::arg("text"));
  m.def("validate", [](const std::string& text) { return validation_to_json(validate_problem(parse_problem(text))).dump(); },
        py::arg("text"));
  m.def("h11", &h11, py::arg("text"), py::arg("backend") = std::nullopt, py::arg("tolerance") = std::nullopt,
        py::arg("b_minus") = std::nullopt);
  m.def("ak_scan", &ak_scan, py::arg("text"));
  m.def("cohomology",
        [](const std::string& text) {
          return cohomology_to_json(ce_cohomology(resolve_structure(parse_problem(text).structure).lie)).dump();
        },
        py::arg("text"));
  m.def("tables",
        [](const std::string& text) { return operator_tables_to_json(resolve_structure(parse_problem(text).structure)).dump(); },
        py::arg("text"));
  m.def("sweep", &sweep, py::arg("text"), py::arg("backend") = std::nullopt, py::arg("tolerance") = std::nullopt,
        py::arg("threads") = 0u);
}
