#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>

#include "wdiam/analysis.hpp"
#include "wdiam/asymptotics.hpp"
#include "wdiam/error.hpp"
#include "wdiam/io.hpp"
#include "wdiam/oracle.hpp"
#include "wdiam/sweep.hpp"

namespace py = pybind11;
using namespace wdiam;

namespace {

WState make(const std::vector<double>& coeffs, bool renormalize) {
  return WState::make(coeffs, {.renormalize = renormalize});
}

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::tuple table_to_py(const SweepTable& t) {
  py::list rows;
  for (const auto& row : t.rows) {
    py::list r;
    for (const auto& cell : row) {
      if (std::holds_alternative<double>(cell)) {
        r.append(std::get<double>(cell));
      } else if (std::holds_alternative<std::string>(cell)) {
        r.append(std::get<std::string>(cell));
      } else {
        r.append(py::none());
      }
    }
    rows.append(r);
  }
  return py::make_tuple(t.columns, rows, t.footer);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geometric entanglement of N-qubit W states";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&] { return py::object(py::exception<Error>(m, "Error", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object exc = type(std::string(to_string(e.code())) + ": " + e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::enum_<Region>(m, "Region")
      .value("SYMMETRIC", Region::Symmetric)
      .value("ASYMMETRIC", Region::Asymmetric)
      .value("SLIGHT", Region::Slight);
  py::enum_<Branch>(m, "Branch")
      .value("SYMMETRIC", Branch::SymmetricEq)
      .value("ASYMMETRIC", Branch::AsymmetricEq)
      .value("NONE", Branch::NoDiameter);

  py::class_<WState>(m, "WState")
      .def(py::init(&make), py::arg("coeffs"), py::arg("renormalize") = false)
      .def_property_readonly("coeffs", [](const WState& s) {
        return std::vector<double>(s.coeffs().begin(), s.coeffs().end());
      })
      .def_property_readonly("n", &WState::size)
      .def_property_readonly("max_index", &WState::max_index)
      .def_property_readonly("largest", &WState::largest)
      .def_property_readonly("renormalized", &WState::renormalized)
      .def("__len__", &WState::size);

  py::class_<RegionReport>(m, "RegionReport")
      .def_readonly("r1", &RegionReport::r1)
      .def_readonly("r2", &RegionReport::r2)
      .def_readonly("largest", &RegionReport::largest)
      .def_readonly("bz", &RegionReport::bz)
      .def_readonly("region", &RegionReport::region)
      .def_readonly("on_r1", &RegionReport::on_r1)
      .def_readonly("on_r2", &RegionReport::on_r2);

  py::class_<DiameterSolution>(m, "DiameterSolution")
      .def_readonly("branch", &DiameterSolution::branch)
      .def_readonly("r", &DiameterSolution::r)
      .def_readonly("residual", &DiameterSolution::residual)
      .def_readonly("iterations", &DiameterSolution::iterations);

  py::class_<OverlapReport>(m, "OverlapReport")
      .def_readonly("g", &OverlapReport::g)
      .def_readonly("g_squared", &OverlapReport::g_squared)
      .def_readonly("e_g", &OverlapReport::e_g)
      .def_property_readonly("e_g_bits", &OverlapReport::e_g_bits);

  m.def("classify", &classify, py::arg("state"));
  m.def("first_critical", py::overload_cast<const WState&>(&first_critical), py::arg("state"));
  m.def("second_critical", py::overload_cast<const WState&>(&second_critical), py::arg("state"));
  m.def("solve", py::overload_cast<const WState&>(&solve), py::arg("state"));
  m.def("overlap", [](const WState& s) { return overlap_from_diameter(s, solve(s)); },
        py::arg("state"));
  m.def("nearest_product", [](const WState& s) { return nearest_product(s, solve(s)).thetas; },
        py::arg("state"));
  m.def("analyze", [](const WState& s) { return to_py(io::analysis_json(s, analyze(s))); },
        py::arg("state"), "Same fields as the CLI analyze output.");

  m.def(
      "maximize_overlap",
      [](const WState& s, int starts, std::uint64_t seed) {
        OracleOptions o;
        o.starts = starts;
        o.seed = seed;
        return to_py(io::oracle_json(s, maximize_overlap(s, o)));
      },
      py::arg("state"), py::arg("starts") = 32, py::arg("seed") = 7);

  m.def("g_three_qubit", &g_three_qubit, py::arg("c1"), py::arg("c2"), py::arg("c3"));
  m.def(
      "r_two_param", [](int mm, int k, double theta) { return r_two_param({mm, k, theta}); },
      py::arg("m"), py::arg("k"), py::arg("theta"));
  m.def("g2_symmetric_limit", &g2_symmetric_limit, py::arg("state"));
  m.def("r_asymmetric_closed", &r_asymmetric_closed, py::arg("c"));
  m.def("g2_asymmetric_closed", &g2_asymmetric_closed, py::arg("c"));
  m.def("g2_interpolating", &g2_interpolating, py::arg("bz"));
  m.def("r1_large_n_estimate", &r1_large_n_estimate, py::arg("n"));

  m.def(
      "figure_sweep",
      [](int figure, std::size_t points, bool oracle) {
        SweepOptions o;
        o.points = points;
        o.oracle = oracle;
        return table_to_py(figure_sweep(figure, o));
      },
      py::arg("figure"), py::arg("points") = 400, py::arg("oracle") = false,
      "Returns (columns, rows, footer); missing cells are None.");
}
