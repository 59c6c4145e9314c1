// Python bindings. Specs and reports cross the boundary as dicts via json.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "etaricci/cli.hpp"
#include "etaricci/io.hpp"
#include "etaricci/parse.hpp"
#include "etaricci/solutions.hpp"

namespace py = pybind11;
using namespace etaricci;

namespace {

Json from_py(const py::object& obj) {
  const std::string text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return Json::parse(text);
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

DiagonalMetric metric_arg(const py::object& obj) { return metric_from_json(from_py(obj), "<python>"); }

Point point_arg(const std::vector<double>& p) {
  if (p.size() != 3) throw PreconditionError("a point needs three coordinates");
  return {p[0], p[1], p[2]};
}

}  // namespace

PYBIND11_MODULE(etaricci, m) {
  m.doc() = "Curvature, flatness and almost eta-Ricci solitons of diagonal 3-metrics";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("eval_expr", [](const std::string& text, const std::vector<double>& p) {
    return eval(parse_expr(text), point_arg(p));
  }, py::arg("expr"), py::arg("point"));

  m.def("diff_expr", [](const std::string& text, int axis) {
    return diff(parse_expr(text), axis_from_number(axis)).to_string();
  }, py::arg("expr"), py::arg("axis"));

  m.def("classify", [](const py::object& metric) { return to_string(classify(metric_arg(metric))); },
        py::arg("metric"));

  m.def("ricci", [](const py::object& metric, const std::vector<double>& p) {
    return evaluate(ricci_frame(metric_arg(metric)), point_arg(p));
  }, py::arg("metric"), py::arg("point"), "Ricci tensor in the frame basis at a point");

  m.def("ricci_oracle", [](const py::object& metric, const std::vector<double>& p) {
    return ricci_coordinate_oracle(metric_arg(metric), point_arg(p));
  }, py::arg("metric"), py::arg("point"));

  m.def("flatness", [](const py::object& metric, int grid, double tol_flat,
                       std::optional<std::string> as_case) {
    FlatnessOptions opts;
    opts.grid_n = grid;
    opts.tol_flat = tol_flat;
    if (as_case) opts.as_case = case_tag_from_string(*as_case);
    return to_py(to_json(flatness_criterion(metric_arg(metric), opts)));
  }, py::arg("metric"), py::arg("grid") = kDefaultGrid, py::arg("tol_flat") = kDefaultTolFlat,
        py::arg("case") = py::none());

  m.def("check_soliton", [](const py::object& spec, int grid, double tol) {
    const SolitonData s = soliton_from_json(from_py(spec), "<python>");
    Json j = to_json(residual(s, {grid, tol}));
    j["kind"] = to_string(soliton_kind(s, grid));
    return to_py(j);
  }, py::arg("spec"), py::arg("grid") = kDefaultGrid, py::arg("tol") = kDefaultTolSoliton);

  m.def("solve", [](const py::object& metric, const std::string& theorem,
                    const std::map<std::string, std::string>& params, int grid) {
    return to_py(soliton_to_json(solve_by_name(metric_arg(metric), theorem, params, grid)));
  }, py::arg("metric"), py::arg("theorem"), py::arg("params") = std::map<std::string, std::string>{},
        py::arg("grid") = kDefaultGrid);

  m.def("theorems", [] { return theorem_names(); });

  m.def("examples", [] {
    py::dict out;
    for (const CatalogueEntry& e : builtin_examples())
      out[py::str(e.name)] = to_py(soliton_to_json(e.soliton));
    return out;
  }, "Catalogue entries as soliton specs, keyed by name");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr)");
}
