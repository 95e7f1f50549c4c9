// Python bindings for the Rb(87) model-potential / WKB library.

#include "rbwkb/action.hpp"
#include "rbwkb/errors.hpp"
#include "rbwkb/numerov.hpp"
#include "rbwkb/params.hpp"
#include "rbwkb/potential.hpp"
#include "rbwkb/reference.hpp"
#include "rbwkb/spectrum.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rbwkb;

PYBIND11_MODULE(_rbwkb, m) {
    m.doc() = "Rb(87) Rydberg spectra from a modified model potential with WKB quantization";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_RuntimeError);

    py::class_<CoreRow>(m, "CoreRow")
        .def(py::init<>())
        .def_readwrite("a1", &CoreRow::a1)
        .def_readwrite("a2", &CoreRow::a2)
        .def_readwrite("a3", &CoreRow::a3)
        .def_readwrite("a4", &CoreRow::a4)
        .def_readwrite("r_c", &CoreRow::r_c);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("Z", &ModelParams::Z)
        .def_readwrite("rows", &ModelParams::rows)
        .def_readwrite("alpha_c", &ModelParams::alpha_c)
        .def_readwrite("alpha_fs", &ModelParams::alpha_fs)
        .def_readwrite("r_so", &ModelParams::r_so)
        .def_readwrite("a3_scale", &ModelParams::a3_scale)
        .def_readwrite("reduced_mass", &ModelParams::reduced_mass)
        .def("a3_eff", &ModelParams::a3_eff, py::arg("l"))
        .def("r_c", &ModelParams::r_c, py::arg("l"))
        .def_static("pure_coulomb", &ModelParams::pure_coulomb);

    py::class_<Channel>(m, "Channel")
        .def(py::init([](int l, double j, bool include_so, bool langer) {
                 Channel ch{l, j, include_so, langer};
                 check_channel(ch);
                 return ch;
             }),
             py::arg("l"), py::arg("j"), py::arg("include_so") = true,
             py::arg("langer") = true)
        .def_readwrite("l", &Channel::l)
        .def_readwrite("j", &Channel::j)
        .def_readwrite("include_so", &Channel::include_so)
        .def_readwrite("langer", &Channel::langer)
        .def("__repr__", [](const Channel& c) {
            return "Channel(l=" + std::to_string(c.l) + ", j=" + std::to_string(c.j) +
                   ", include_so=" + (c.include_so ? std::string("True") : "False") +
                   ", langer=" + (c.langer ? std::string("True") : "False") + ")";
        });

    m.def("load_params", &load_params, py::arg("path"));
    m.def("default_params", &default_params);
    m.def("default_data_dir", &default_data_dir);
    m.def("validate_params", &validate_params, py::arg("params"));

    m.def("z_eff", &z_eff, py::arg("r"), py::arg("l"), py::arg("params"));
    m.def("v_pol", &v_pol, py::arg("r"), py::arg("l"), py::arg("params"));
    m.def("v_eff", &v_eff, py::arg("r"), py::arg("l"), py::arg("params"));
    m.def("dv_eff_dr", &dv_eff_dr, py::arg("r"), py::arg("l"), py::arg("params"));
    m.def("v_so", &v_so, py::arg("r"), py::arg("channel"), py::arg("params"));
    m.def("v_so_reg", &v_so_reg, py::arg("r"), py::arg("channel"), py::arg("params"));
    m.def("v_mod", &v_mod, py::arg("r"), py::arg("channel"), py::arg("params"));
    m.def("q_function", &q_function, py::arg("r"), py::arg("channel"), py::arg("energy"),
          py::arg("params"));

    py::class_<TurningPoints>(m, "TurningPoints")
        .def_readonly("r_minus", &TurningPoints::r_minus)
        .def_readonly("r_plus", &TurningPoints::r_plus)
        .def_readonly("residual_minus", &TurningPoints::residual_minus)
        .def_readonly("residual_plus", &TurningPoints::residual_plus);

    py::class_<ActionEvaluation>(m, "ActionEvaluation")
        .def_readonly("nu", &ActionEvaluation::nu)
        .def_readonly("E", &ActionEvaluation::E)
        .def_readonly("turning_points", &ActionEvaluation::turning_points)
        .def_readonly("abs_err_estimate", &ActionEvaluation::abs_err_estimate);

    py::class_<ScanFit>(m, "ScanFit")
        .def_readonly("slope", &ScanFit::slope)
        .def_readonly("intercept", &ScanFit::intercept)
        .def_readonly("max_residual", &ScanFit::max_residual);

    py::class_<ActionScan>(m, "ActionScan")
        .def_readonly("points", &ActionScan::points)
        .def_readonly("fit", &ActionScan::fit);

    m.def("turning_points", &turning_points, py::arg("channel"), py::arg("energy"),
          py::arg("params"));
    m.def("action_integral", &action_integral, py::arg("channel"), py::arg("energy"),
          py::arg("params"), py::arg("tol") = 1e-12);
    m.def("born_contour_integral", &born_contour_integral, py::arg("A"), py::arg("B"),
          py::arg("C"), py::arg("D"));
    m.def("coulomb_action", &coulomb_action, py::arg("channel"), py::arg("energy"),
          py::arg("params"));
    m.def("action_scan", &action_scan, py::arg("channel"), py::arg("energies"),
          py::arg("params"), py::arg("tol") = 1e-12);

    py::class_<SpectralResult>(m, "SpectralResult")
        .def_readonly("n", &SpectralResult::n)
        .def_readonly("n_r", &SpectralResult::n_r)
        .def_readonly("channel", &SpectralResult::channel)
        .def_readonly("E", &SpectralResult::E)
        .def_readonly("defect_effective", &SpectralResult::defect_effective)
        .def_readonly("quantization_residual", &SpectralResult::quantization_residual);

    py::class_<DefectResult>(m, "DefectResult")
        .def_readonly("channel", &DefectResult::channel)
        .def_readonly("Delta", &DefectResult::Delta)
        .def_readonly("delta_l", &DefectResult::delta_l)
        .def_readonly("eta", &DefectResult::eta)
        .def_readonly("extrapolation_spread", &DefectResult::extrapolation_spread);

    m.def("solve_eigenvalue", &solve_eigenvalue, py::arg("n_r"), py::arg("channel"),
          py::arg("params"), py::arg("tol") = 1e-12);
    m.def("quantum_defect", &quantum_defect, py::arg("channel"), py::arg("params"),
          py::arg("tol") = 1e-12);
    m.def("fine_splitting_direct", &fine_splitting_direct, py::arg("n"), py::arg("l"),
          py::arg("params"), py::arg("langer") = true, py::arg("include_so") = true);
    m.def("fine_splitting_leading", &fine_splitting_leading, py::arg("n"), py::arg("l"),
          py::arg("params"), py::arg("langer") = true, py::arg("include_so") = true);
    m.def("to_mhz", &to_mhz, py::arg("energy"), py::arg("params"));
    m.def("energy_from_defect", &energy_from_defect, py::arg("n"), py::arg("Delta"));

    py::class_<RadialGrid>(m, "RadialGrid")
        .def(py::init<>())
        .def_readwrite("r_min", &RadialGrid::r_min)
        .def_readwrite("r_max", &RadialGrid::r_max)
        .def_readwrite("N", &RadialGrid::N);

    py::class_<OracleEigenvalue>(m, "OracleEigenvalue")
        .def_readonly("E", &OracleEigenvalue::E)
        .def_readonly("node_count", &OracleEigenvalue::node_count)
        .def_readonly("matching_defect", &OracleEigenvalue::matching_defect)
        .def_readonly("grid_change", &OracleEigenvalue::grid_change);

    py::class_<WavefunctionProfile>(m, "WavefunctionProfile")
        .def_readonly("r", &WavefunctionProfile::r)
        .def_readonly("U", &WavefunctionProfile::U)
        .def_readonly("node_count", &WavefunctionProfile::node_count);

    m.def("default_grid", &default_grid, py::arg("n"));
    m.def("oracle_eigenvalue", &oracle_eigenvalue, py::arg("n_r"), py::arg("channel"),
          py::arg("params"), py::arg("grid"));
    m.def("wavefunction_profile", &wavefunction_profile, py::arg("energy"),
          py::arg("channel"), py::arg("params"), py::arg("grid"));

    py::class_<ReferenceRecord>(m, "ReferenceRecord")
        .def_readonly("observable", &ReferenceRecord::observable)
        .def_readonly("n", &ReferenceRecord::n)
        .def_readonly("l", &ReferenceRecord::l)
        .def_readonly("j", &ReferenceRecord::j)
        .def_readonly("value", &ReferenceRecord::value)
        .def_readonly("uncertainty", &ReferenceRecord::uncertainty)
        .def_readonly("unit", &ReferenceRecord::unit)
        .def_readonly("source", &ReferenceRecord::source);

    m.def("load_references", &load_references, py::arg("path"));
    m.def("select_references", &rbwkb::select, py::arg("records"), py::arg("observable"),
          py::arg("n"), py::arg("l"), py::arg("j") = std::nullopt);
}
