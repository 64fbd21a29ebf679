#ifndef RADWAVE_HARNESS_HPP
#define RADWAVE_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "radwave/boundary_data.hpp"
#include "radwave/solver.hpp"

namespace radwave {

// One epsilon-ladder experiment: data family, ladder, boundary kind, grid
// policy and the space-time test function used by residual measurements.
struct StudySpec {
  FunctionPtr phi;
  FunctionPtr psi;
  RegularityTag tag = RegularityTag::smooth_compact;
  std::vector<double> eps_ladder;  // strictly decreasing, positive
  BoundaryKind bc = BoundaryKind::neumann_for_u;
  double c = 1.0;
  double T = 1.0;
  int cells_per_eps = 16;  // dr = eps_min / cells_per_eps (one shared grid)
  double margin = 0.25;    // r_max slack beyond data support (+ c T)
  double cfl = 0.5;
  int max_snapshots = 512;
  int jobs = 1;
  // V(t,x) = a(t) b(|x|), a(t) = (1 - (t/T)^2)^time_power, b = poly_bump
  double test_radius = 2.0;
  int test_poly_k = 4;
  int time_power = 4;

  void validate() const;  // throws std::invalid_argument on bad ladders/grids
  double eps_min() const { return eps_ladder.back(); }
};

// Shared ladder grid; with_propagation adds c*T to the required reach.
RadialGrid study_grid(const StudySpec& spec, bool with_propagation);

struct RatePoint {
  double eps;
  double value;
};

struct RateFit {
  double slope = 0.0;
  double rms_residual = 0.0;
  int used_rows = 0;
};

// Least-squares slope of log(value) against log(eps). Rows with value below
// 1e-14 are dropped as converged-to-zero; fewer than 3 usable rows throws.
RateFit fit_rate(const std::vector<RatePoint>& rows);

struct QuantitySeries {
  std::string name;
  std::vector<RatePoint> rows;
  std::optional<RateFit> fit;
  std::optional<double> theory_slope;
};

struct ConvergenceReport {
  std::vector<QuantitySeries> quantities;
  const QuantitySeries& q(const std::string& name) const;
};

// Separable space-time test function V(t,x) = a(t) b(|x|).
class SpaceTimeTestFunction {
 public:
  SpaceTimeTestFunction(double T, int time_power, FunctionPtr radial);
  double a(double t) const;
  double a_dt(double t) const;
  double a_dtt(double t) const;
  double b(double r) const { return radial_->value(r); }
  double b_dr(double r) const { return radial_->deriv(r); }
  double b_lap(double r) const { return radial_->laplacian(r); }
  double box(double t, double r, double c) const {
    return a_dtt(t) * b(r) - c * c * a(t) * b_lap(r);
  }
  double horizon() const { return T_; }
  double support_radius() const { return radial_->support_radius(); }

 private:
  double T_;
  int p_;
  FunctionPtr radial_;
};

SpaceTimeTestFunction default_test_function(const StudySpec& spec);

enum class WeakForm { H1_form, L2_form };

// Defect of the field from being a weak solution with the given data:
//   H1_form: int_0^T int U V_tt + c^2 grad U . grad V dx dt
//            + int Phi V_t(0) - Psi V(0) dx
//   L2_form: int_0^T int U box V dx dt + the same data terms.
// Space-time Simpson over the stored snapshots; the field must cover all
// space.
double weak_form_residual(const WaveField& field, const CauchyDataPair& data,
                          const SpaceTimeTestFunction& V, WeakForm form);

// Distances between constructed boundary data and the base data at L2/H1/H2,
// plus the H2 pair norm of the constructed data. Quantities: l2_distance,
// h1_distance, h2_distance, h2_norm.
ConvergenceReport data_rate_study(const StudySpec& spec);

// Exterior solves, extended and compared against the reference Cauchy field:
// sup over stored times at H1 (Neumann) or L2 (Dirichlet). Also reports the
// normalized boundary trace sup_t |u_t(t,eps)| sqrt(eps) / A_eps for Neumann
// ladders (quantity trace_ratio).
ConvergenceReport solution_convergence_study(const StudySpec& spec);

struct ResidualRung {
  double eps;
  double boundary;  // -c^2 int_0^T d_r u(t,eps) (int_{|x|=eps} V dS) dt
  double weak;      // weak-form residual of the same field, native time step
  double gap;       // |boundary - weak| / max(|boundary|, |weak|)
};

struct ResidualStudyResult {
  std::vector<ResidualRung> rungs;
  ConvergenceReport report;  // quantities: boundary_residual, identity_gap
};

// Dirichlet boundary-residual decay, with the weak-form identity checked per
// rung. The solve runs at the spec's cfl (1 gives a nodally exact field) and
// both sides are accumulated at the native time step.
ResidualStudyResult residual_study(const StudySpec& spec,
                                   const SpaceTimeTestFunction& V);

struct PairDiagnostics {
  std::vector<double> times;
  std::vector<double> energy;      // E_{m,n}(t) of the extended difference
  std::vector<double> l2_half;     // D_{m,n}(t) = 1/2 ||Z||_L2^2
  double sup_energy = 0.0;
  double sup_l2_half = 0.0;
};

// Difference diagnostics between ladder entries i_n > i_m (eps_n < eps_m),
// Neumann boundary kind.
PairDiagnostics cauchy_pair_diagnostics(const StudySpec& spec, int i_n, int i_m);

}  // namespace radwave

#endif
