#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radwave/boundary_data.hpp"
#include "radwave/harness.hpp"
#include "radwave/mollify.hpp"
#include "radwave/norms.hpp"
#include "radwave/profile.hpp"
#include "radwave/solver.hpp"

namespace py = pybind11;
using namespace radwave;

namespace {

RegionSpec region_from_string(const std::string& kind, double rho1, double rho2) {
  if (kind == "all_space") return RegionSpec::all_space();
  if (kind == "ball") return RegionSpec::ball(rho2 > 0.0 ? rho2 : rho1);
  if (kind == "annulus") return RegionSpec::annulus(rho1, rho2);
  if (kind == "exterior") return RegionSpec::exterior(rho1);
  throw std::invalid_argument("unknown region kind: " + kind);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "radial wave laboratory: exterior-solution data, norms and solves";

  py::class_<RadialGrid>(m, "RadialGrid")
      .def_readonly("r_max", &RadialGrid::r_max)
      .def_readonly("n_points", &RadialGrid::n_points)
      .def_readonly("dr", &RadialGrid::dr)
      .def_readonly("nodes", &RadialGrid::nodes);

  py::class_<RadialProfile>(m, "RadialProfile")
      .def_readonly("grid", &RadialProfile::grid)
      .def_readonly("values", &RadialProfile::values)
      .def_readonly("support_radius", &RadialProfile::support_radius)
      .def("value_at", &RadialProfile::value_at);

  py::enum_<RegularityTag>(m, "RegularityTag")
      .value("H2xH1", RegularityTag::H2xH1)
      .value("H1xL2", RegularityTag::H1xL2)
      .value("smooth_compact", RegularityTag::smooth_compact);

  py::class_<CauchyDataPair>(m, "CauchyDataPair")
      .def_readonly("position", &CauchyDataPair::position)
      .def_readonly("velocity", &CauchyDataPair::velocity)
      .def_readonly("tag", &CauchyDataPair::tag);

  py::enum_<BoundaryKind>(m, "BoundaryKind")
      .value("neumann_for_u", BoundaryKind::neumann_for_u)
      .value("dirichlet_for_u", BoundaryKind::dirichlet_for_u);

  py::enum_<SobolevOrder>(m, "SobolevOrder")
      .value("L2", SobolevOrder::L2)
      .value("H1", SobolevOrder::H1)
      .value("H2", SobolevOrder::H2);

  py::enum_<TraceKind>(m, "TraceKind")
      .value("u_t_at_eps", TraceKind::u_t_at_eps)
      .value("u_r_at_eps", TraceKind::u_r_at_eps)
      .value("z_r_at_eps", TraceKind::z_r_at_eps);

  m.def("make_grid", &make_grid, py::arg("r_max"), py::arg("n_points"));
  m.def(
      "sample_profile",
      [](const std::string& family, const std::vector<double>& params,
         const RadialGrid& grid) { return sample_profile(family, params, grid); },
      py::arg("family"), py::arg("params"), py::arg("grid"));
  m.def(
      "make_pair",
      [](const std::string& pos_family, const std::vector<double>& pos_params,
         const std::string& vel_family, const std::vector<double>& vel_params,
         const RadialGrid& grid) {
        return make_pair(make_family(pos_family, pos_params, 0.5 * grid.dr),
                         make_family(vel_family, vel_params, 0.5 * grid.dr), grid);
      },
      py::arg("position_family"), py::arg("position_params"),
      py::arg("velocity_family"), py::arg("velocity_params"), py::arg("grid"));
  m.def("cutoff_truncate", &cutoff_truncate, py::arg("profile"), py::arg("r_n"));
  m.def("radial_mollify", &radial_mollify, py::arg("profile"), py::arg("delta"));

  m.def("beta", &beta);
  m.def("chi", &chi);
  m.def("validate_warp", [](int n) {
    const WarpValidation v = validate_warp(n);
    py::dict d;
    d["min_gap"] = v.min_gap;
    d["min_slope"] = v.min_slope;
    d["max_curv_ratio"] = v.max_curv_ratio;
    d["pass"] = v.pass;
    return d;
  });
  m.def("neumann_data", &neumann_data, py::arg("data"), py::arg("eps"));
  m.def("dirichlet_data", &dirichlet_data, py::arg("data"), py::arg("eps"));

  m.def(
      "norms",
      [](const RadialProfile& p, const std::string& region, double rho1,
         double rho2) {
        const NormReport r = norms(p, region_from_string(region, rho1, rho2));
        py::dict d;
        d["l2"] = r.l2;
        d["h1_semi"] = r.h1_semi;
        d["h2_semi"] = r.h2_semi;
        d["region"] = r.region.label();
        return d;
      },
      py::arg("profile"), py::arg("region") = "all_space", py::arg("rho1") = 0.0,
      py::arg("rho2") = 0.0);
  m.def("hardy_ratio", &hardy_ratio);
  m.def("pair_distance", &pair_distance, py::arg("a"), py::arg("b"),
        py::arg("order"));

  py::class_<ExteriorProblem>(m, "ExteriorProblem")
      .def(py::init([](double eps, BoundaryKind bc, const CauchyDataPair& data,
                       double c, double T) {
             ExteriorProblem p;
             p.eps = eps;
             p.bc = bc;
             p.data = data;
             p.c = c;
             p.T = T;
             return p;
           }),
           py::arg("eps"), py::arg("bc"), py::arg("data"), py::arg("c") = 1.0,
           py::arg("T") = 1.0)
      .def_readonly("eps", &ExteriorProblem::eps)
      .def_readonly("c", &ExteriorProblem::c)
      .def_readonly("T", &ExteriorProblem::T);

  py::class_<WaveField>(m, "WaveField")
      .def_readonly("grid", &WaveField::grid)
      .def_readonly("times", &WaveField::times)
      .def_readonly("j_eps", &WaveField::j_eps)
      .def("z_at", &WaveField::z_at)
      .def("u_row", &WaveField::u_row)
      .def("ut_row", &WaveField::ut_row);

  py::class_<EnergyReport>(m, "EnergyReport")
      .def_readonly("times", &EnergyReport::times)
      .def_readonly("first_order", &EnergyReport::first_order)
      .def_readonly("second_order", &EnergyReport::second_order)
      .def_readonly("one_d_c", &EnergyReport::one_d_c)
      .def_readonly("one_d_d", &EnergyReport::one_d_d);

  m.def("solve", &solve, py::arg("problem"), py::arg("n_cells"), py::arg("cfl"),
        py::arg("max_snapshots") = 512);
  m.def(
      "reference_cauchy",
      [](const CauchyDataPair& data, const RadialGrid& grid, double c, double T,
         int max_snapshots) {
        return reference_cauchy(data, grid, c, T, max_snapshots);
      },
      py::arg("data"), py::arg("grid"), py::arg("c"), py::arg("T"),
      py::arg("max_snapshots") = 512);
  m.def("extend", &extend);
  m.def("energies", &energies);
  m.def("boundary_trace", &boundary_trace, py::arg("field"), py::arg("which"));
  m.def("field_distance", &field_distance, py::arg("a"), py::arg("b"),
        py::arg("order"));

  m.def("fit_rate", [](const std::vector<std::pair<double, double>>& rows) {
    std::vector<RatePoint> pts;
    pts.reserve(rows.size());
    for (const auto& [eps, value] : rows) pts.push_back({eps, value});
    const RateFit fit = fit_rate(pts);
    return py::make_tuple(fit.slope, fit.rms_residual);
  });
}
