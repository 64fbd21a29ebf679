#ifndef RADWAVE_SOLVER_HPP
#define RADWAVE_SOLVER_HPP

#include <span>
#include <vector>

#include "radwave/norms.hpp"
#include "radwave/profile.hpp"

namespace radwave {

enum class BoundaryKind { neumann_for_u, dirichlet_for_u };

// Exterior radial wave problem on {|x| > eps}; eps = 0 designates the
// full-space problem with the regularity condition z(t,0) = 0.
struct ExteriorProblem {
  double eps = 0.0;
  BoundaryKind bc = BoundaryKind::dirichlet_for_u;
  CauchyDataPair data;
  double c = 1.0;
  double T = 1.0;
};

enum class ExtensionRule { none, constant_on_ball, zero_on_ball };

// Space-time samples of the reduced unknown z(t,r) = r u(t,r) together with
// its time derivative, at <= max_snapshots stored levels. Immutable once
// solved.
struct WaveField {
  ExteriorProblem problem;
  RadialGrid grid;
  int j_eps = 0;                 // node index of the inner boundary
  double dt = 0.0;               // native time step of the solve
  std::vector<double> times;     // stored snapshot times
  std::vector<double> z;         // [snapshot][node], row-major
  std::vector<double> zt;        // same layout
  ExtensionRule extension = ExtensionRule::none;

  int n_r() const { return grid.n_points; }
  int n_t() const { return static_cast<int>(times.size()); }
  double z_at(int k, int j) const { return z[static_cast<std::size_t>(k) * grid.n_points + j]; }
  double zt_at(int k, int j) const { return zt[static_cast<std::size_t>(k) * grid.n_points + j]; }
  std::span<const double> z_row(int k) const;
  std::span<const double> zt_row(int k) const;
  bool covers_all_space() const { return j_eps == 0 || extension != ExtensionRule::none; }
  // u(t_k, r_j) = z/r with u(t,0) = d_r z(t,0); on the extended ball the rule
  // of the extension applies.
  std::vector<double> u_row(int k) const;
  std::vector<double> ut_row(int k) const;
};

struct EnergyReport {
  std::vector<double> times;
  std::vector<double> first_order;   // 1/2 4pi int (u_t^2 + c^2 u_r^2) r^2 dr
  std::vector<double> second_order;  // same for first spatial derivatives
  std::vector<double> one_d_c;       // int |d_r z|^2 dr
  std::vector<double> one_d_d;       // int |d_rr z|^2 dr
};

// Leapfrog integration of z_tt = c^2 z_rr on (eps, r_max) with the boundary
// condition implied by problem.bc (Dirichlet-for-u: z = 0; Neumann-for-u:
// Robin z_r = z/eps via a second-order ghost node). The spatial grid is the
// data grid resampled to n_cells cells. Requires 0 < cfl <= 1, eps on a grid
// node with >= 8 cells below 2 eps, data compatible with the boundary
// condition, and r_max >= data support + c T.
WaveField solve(const ExteriorProblem& problem, int n_cells, double cfl,
                int max_snapshots = 512);

// Snapshot times solve() will store for these parameters, without running it.
std::vector<double> planned_times(double T, double dr, double c, double cfl,
                                  int max_snapshots = 512);

// Exact full-space radial Cauchy solution via the odd-reflection d'Alembert
// formula for z = r u, evaluated at grid nodes and the requested times.
WaveField reference_cauchy(const CauchyDataPair& data, const RadialGrid& grid,
                           double c, double T, int max_snapshots = 512);
WaveField reference_cauchy(const CauchyDataPair& data, const RadialGrid& grid,
                           double c, const std::vector<double>& times);

// Continuous extension onto the ball: constant u(t,eps) for Neumann fields,
// zero for Dirichlet fields. Throws if the field is already extended.
WaveField extend(const WaveField& field);

EnergyReport energies(const WaveField& field);

enum class TraceKind { u_t_at_eps, u_r_at_eps, z_r_at_eps };

// Per-snapshot one-sided 2nd-order boundary evaluation at r = eps.
std::vector<double> boundary_trace(const WaveField& field, TraceKind which);

// sup over stored times of the 3-d radial norm of the difference of the
// extended u-fields over all space (L2 or full H1).
double field_distance(const WaveField& a, const WaveField& b, SobolevOrder order);

// Exact solution of z_tt = c^2 z_rr on (a, inf) with z(t, a) = 0, data
// z(0,r) = r phi(r), z_t(0,r) = r psi(r), by odd reflection about a. Serves
// as the reference formula (a = 0) and as the exterior Dirichlet oracle.
class HalfLineDalembert {
 public:
  HalfLineDalembert(FunctionPtr phi, FunctionPtr psi, double a, double c,
                    double reach);
  double z(double t, double r) const;
  double zt(double t, double r) const;

 private:
  double z0(double xi) const;    // odd extension of r phi(r)
  double z0p(double xi) const;   // its derivative
  double z1(double xi) const;    // odd extension of r psi(r)
  double mass(double xi) const;  // int_a^xi of the odd extension of r psi

  FunctionPtr phi_, psi_;
  double a_, c_, reach_, table_h_;
  std::vector<double> table_;  // cumulative int_a^x s psi(s) ds
};

}  // namespace radwave

#endif
