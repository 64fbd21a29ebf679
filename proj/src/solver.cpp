#include "radwave/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radwave/fd.hpp"
#include "radwave/quadrature.hpp"

namespace radwave {

namespace {

double profile_reach(const RadialProfile& p) {
  if (std::isfinite(p.support_radius)) return p.support_radius;
  if (p.descriptor) return effective_support(*p.descriptor);
  return p.grid.r_max;
}

double data_reach(const CauchyDataPair& d) {
  return std::max(profile_reach(d.position), profile_reach(d.velocity));
}

// 4th-order one-sided derivative at the left end of a row.
double deriv1_left4(std::span<const double> f, std::size_t j, double h) {
  return (-25.0 * f[j] + 48.0 * f[j + 1] - 36.0 * f[j + 2] + 16.0 * f[j + 3] -
          3.0 * f[j + 4]) / (12.0 * h);
}

struct TimeStepping {
  double dt;
  int n_steps;   // levels 0..n_steps
  int stride;    // snapshot stride; divides n_steps
};

TimeStepping plan_steps(double T, double dr, double c, double cfl,
                        int max_snapshots) {
  if (!(cfl > 0.0 && cfl <= 1.0 + 1e-12))
    throw std::invalid_argument("solve: CFL ratio must lie in (0, 1]");
  if (max_snapshots < 2) throw std::invalid_argument("solve: need >= 2 snapshots");
  const double dt_target = cfl * dr / c;
  int n = static_cast<int>(std::ceil(T / dt_target - 1e-9));
  n = std::max(n, 2);
  // prefer a stride dividing the step count so that dt (and a CFL=1 setup)
  // is untouched; otherwise pad the step count up
  int stride = std::max(1, (n + max_snapshots - 2) / (max_snapshots - 1));
  bool divides = false;
  for (int s = stride; s <= stride + 32; ++s) {
    if (n % s == 0) { stride = s; divides = true; break; }
  }
  if (!divides) n = (n / stride + 1) * stride;
  TimeStepping ts;
  ts.dt = T / n;
  ts.n_steps = n;
  ts.stride = stride;
  if (c * ts.dt / dr > 1.0 + 1e-9)
    throw std::invalid_argument("solve: CFL ratio exceeds 1 after step rounding");
  return ts;
}

void check_compatibility(const CauchyDataPair& d, BoundaryKind bc, double eps) {
  if (eps <= 0.0) return;
  const double scale = 1.0 + std::abs(d.position.value_at(0.0)) +
                       std::abs(d.velocity.value_at(0.0));
  const double tol = 1e-7 * scale;
  for (const RadialProfile* p : {&d.position, &d.velocity}) {
    if (bc == BoundaryKind::dirichlet_for_u) {
      if (std::abs(p->value_at(eps)) > tol)
        throw std::invalid_argument("solve: data incompatible with Dirichlet condition");
    } else {
      double dv;
      if (p->descriptor) {
        dv = p->descriptor->deriv(eps);
      } else {
        const double h = p->grid.dr;
        dv = (p->value_at(eps + h) - p->value_at(eps - h)) / (2.0 * h);
      }
      if (std::abs(dv) > tol)
        throw std::invalid_argument("solve: data incompatible with Neumann condition");
    }
  }
}

}  // namespace

std::vector<double> planned_times(double T, double dr, double c, double cfl,
                                  int max_snapshots) {
  const TimeStepping ts = plan_steps(T, dr, c, cfl, max_snapshots);
  std::vector<double> times(ts.n_steps / ts.stride + 1);
  for (std::size_t i = 0; i < times.size(); ++i)
    times[i] = static_cast<double>(i) * ts.stride * ts.dt;
  return times;
}

std::span<const double> WaveField::z_row(int k) const {
  return {z.data() + static_cast<std::size_t>(k) * grid.n_points,
          static_cast<std::size_t>(grid.n_points)};
}

std::span<const double> WaveField::zt_row(int k) const {
  return {zt.data() + static_cast<std::size_t>(k) * grid.n_points,
          static_cast<std::size_t>(grid.n_points)};
}

std::vector<double> WaveField::u_row(int k) const {
  const auto zr = z_row(k);
  std::vector<double> u(grid.n_points);
  for (int j = 1; j < grid.n_points; ++j) u[j] = zr[j] / grid.nodes[j];
  if (j_eps > 0) {
    u[0] = (extension == ExtensionRule::constant_on_ball) ? zr[j_eps] / grid.nodes[j_eps]
                                                          : 0.0;
  } else {
    u[0] = deriv1_left4(zr, 0, grid.dr);
  }
  return u;
}

std::vector<double> WaveField::ut_row(int k) const {
  const auto ztr = zt_row(k);
  std::vector<double> ut(grid.n_points);
  for (int j = 1; j < grid.n_points; ++j) ut[j] = ztr[j] / grid.nodes[j];
  if (j_eps > 0) {
    ut[0] = (extension == ExtensionRule::constant_on_ball)
                ? ztr[j_eps] / grid.nodes[j_eps]
                : 0.0;
  } else {
    ut[0] = deriv1_left4(ztr, 0, grid.dr);
  }
  return ut;
}

WaveField solve(const ExteriorProblem& problem, int n_cells, double cfl,
                int max_snapshots) {
  const CauchyDataPair& d = problem.data;
  if (problem.eps < 0.0 || problem.c <= 0.0 || problem.T <= 0.0)
    throw std::invalid_argument("solve: invalid problem parameters");
  if (n_cells < 16) throw std::invalid_argument("solve: grid too coarse");
  if (!d.position.grid.same_as(d.velocity.grid))
    throw std::invalid_argument("solve: data components on different grids");

  const RadialGrid grid = make_grid(d.position.grid.r_max, n_cells + 1);
  const int n = grid.n_points;
  const double dr = grid.dr;
  const double c = problem.c;

  int j0 = 0;
  if (problem.eps > 0.0) {
    j0 = grid.node_index(problem.eps);
    if (j0 < 8) throw std::invalid_argument("solve: fewer than 8 cells below eps");
    check_compatibility(d, problem.bc, problem.eps);
  }
  const double reach = data_reach(d);
  if (grid.r_max < reach + c * problem.T - 1e-9)
    throw std::invalid_argument("solve: r_max smaller than data support + c*T");

  const TimeStepping ts = plan_steps(problem.T, dr, c, cfl, max_snapshots);
  const double dt = ts.dt;
  const double lam2 = (c * dt / dr) * (c * dt / dr);
  const bool robin = problem.eps > 0.0 && problem.bc == BoundaryKind::neumann_for_u;

  // initial data for z = r u
  std::vector<double> z0(n, 0.0), z1(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const double r = grid.nodes[j];
    z0[j] = r * d.position.value_at(r);
    z1[j] = r * d.velocity.value_at(r);
  }
  if (j0 > 0 && problem.bc == BoundaryKind::dirichlet_for_u) z0[j0] = z1[j0] = 0.0;

  const int n_snap = ts.n_steps / ts.stride + 1;
  WaveField f;
  f.problem = problem;
  f.grid = grid;
  f.j_eps = j0;
  f.dt = dt;
  f.extension = ExtensionRule::none;
  f.times.resize(n_snap);
  f.z.assign(static_cast<std::size_t>(n_snap) * n, 0.0);
  f.zt.assign(static_cast<std::size_t>(n_snap) * n, 0.0);
  auto record = [&](int snap, int level, const std::vector<double>& zl,
                    const std::vector<double>& ztl) {
    f.times[snap] = level * dt;
    std::copy(zl.begin(), zl.end(),
              f.z.begin() + static_cast<std::size_t>(snap) * n);
    std::copy(ztl.begin(), ztl.end(),
              f.zt.begin() + static_cast<std::size_t>(snap) * n);
  };
  record(0, 0, z0, z1);

  // first level: exact d'Alembert start at CFL = 1 for Dirichlet-type
  // boundaries with descriptor data, 2nd-order Taylor start otherwise
  std::vector<double> zprev = z0, zcur(n, 0.0), znext(n, 0.0);
  const bool unit_cfl = std::abs(c * dt - dr) <= 1e-12 * dr;
  if (unit_cfl && !robin && d.velocity.descriptor) {
    const auto& psi = *d.velocity.descriptor;
    std::vector<double> mass =
        cumulative_gauss([&](double s) { return s * psi.value(s); },
                         grid.nodes[j0], dr, static_cast<std::size_t>(n - 1 - j0));
    for (int j = j0 + 1; j < n - 1; ++j)
      zcur[j] = 0.5 * (z0[j + 1] + z0[j - 1]) +
                (mass[j + 1 - j0] - mass[j - 1 - j0]) / (2.0 * c);
  } else {
    std::vector<double> z0rr(n, 0.0);
    if (d.position.descriptor) {
      const auto& phi = *d.position.descriptor;
      for (int j = j0; j < n; ++j) {
        const double r = grid.nodes[j];
        z0rr[j] = 2.0 * phi.deriv(r) + r * phi.second(r);
      }
    } else {
      for (int j = std::max(j0, 1); j < n - 1; ++j)
        z0rr[j] = (z0[j + 1] - 2.0 * z0[j] + z0[j - 1]) / (dr * dr);
      if (robin) {
        const double ghost = z0[j0 + 1] - 2.0 * dr * z0[j0] / problem.eps;
        z0rr[j0] = (z0[j0 + 1] - 2.0 * z0[j0] + ghost) / (dr * dr);
      }
    }
    for (int j = j0; j < n - 1; ++j)
      zcur[j] = z0[j] + dt * z1[j] + 0.5 * dt * dt * c * c * z0rr[j];
    if (j0 > 0 && problem.bc == BoundaryKind::dirichlet_for_u) zcur[j0] = 0.0;
    if (j0 == 0) zcur[0] = 0.0;
  }

  // leapfrog over levels 2 .. n_steps+1; level k-1 is recorded once z^k is
  // available so that zt uses the native centered difference
  for (int k = 2; k <= ts.n_steps + 1; ++k) {
    for (int j = j0 + 1; j < n - 1; ++j) {
      const double lap = zcur[j + 1] - 2.0 * zcur[j] + zcur[j - 1];
      znext[j] = 2.0 * zcur[j] - zprev[j] + lam2 * lap;
    }
    if (robin) {
      // ghost node from the centered Robin condition z_r(t,eps) = z/eps
      const double lap0 =
          2.0 * zcur[j0 + 1] - 2.0 * zcur[j0] * (1.0 + dr / problem.eps);
      znext[j0] = 2.0 * zcur[j0] - zprev[j0] + lam2 * lap0;
    } else {
      znext[j0] = 0.0;
    }
    znext[n - 1] = 0.0;
    const int level = k - 1;
    if (level % ts.stride == 0) {
      std::vector<double> ztl(n, 0.0);
      for (int j = j0; j < n; ++j) ztl[j] = (znext[j] - zprev[j]) / (2.0 * dt);
      record(level / ts.stride, level, zcur, ztl);
    }
    std::swap(zprev, zcur);
    std::swap(zcur, znext);
  }
  return f;
}

HalfLineDalembert::HalfLineDalembert(FunctionPtr phi, FunctionPtr psi, double a,
                                     double c, double reach)
    : phi_(std::move(phi)), psi_(std::move(psi)), a_(a), c_(c), reach_(reach) {
  if (!phi_ || !psi_) throw std::invalid_argument("dalembert: need descriptor data");
  if (reach_ <= a_) throw std::invalid_argument("dalembert: empty domain");
  constexpr std::size_t kCells = 1 << 18;
  table_h_ = (reach_ - a_) / kCells;
  table_ = cumulative_gauss([this](double s) { return s * psi_->value(s); }, a_,
                            table_h_, kCells);
}

double HalfLineDalembert::z0(double xi) const {
  if (xi >= a_) return (xi >= reach_) ? 0.0 : xi * phi_->value(xi);
  const double m = 2.0 * a_ - xi;
  return (m >= reach_) ? 0.0 : -m * phi_->value(m);
}

double HalfLineDalembert::z0p(double xi) const {
  auto slope = [this](double r) { return phi_->value(r) + r * phi_->deriv(r); };
  if (xi >= a_) return (xi >= reach_) ? 0.0 : slope(xi);
  const double m = 2.0 * a_ - xi;
  return (m >= reach_) ? 0.0 : slope(m);
}

double HalfLineDalembert::z1(double xi) const {
  if (xi >= a_) return (xi >= reach_) ? 0.0 : xi * psi_->value(xi);
  const double m = 2.0 * a_ - xi;
  return (m >= reach_) ? 0.0 : -m * psi_->value(m);
}

double HalfLineDalembert::mass(double xi) const {
  // even about a: int_a^xi of the odd extension equals int_a^{2a-xi}
  const double x = (xi >= a_) ? xi : 2.0 * a_ - xi;
  if (x >= reach_) return table_.back();
  const double pos = (x - a_) / table_h_;
  int j = static_cast<int>(pos);
  j = std::clamp(j - 1, 0, static_cast<int>(table_.size()) - 4);
  const double t = pos - j;
  const double w0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
  const double w1 = t * (t - 2.0) * (t - 3.0) / 2.0;
  const double w2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
  const double w3 = t * (t - 1.0) * (t - 2.0) / 6.0;
  return w0 * table_[j] + w1 * table_[j + 1] + w2 * table_[j + 2] +
         w3 * table_[j + 3];
}

double HalfLineDalembert::z(double t, double r) const {
  const double p = r + c_ * t, q = r - c_ * t;
  return 0.5 * (z0(p) + z0(q)) + (mass(p) - mass(q)) / (2.0 * c_);
}

double HalfLineDalembert::zt(double t, double r) const {
  const double p = r + c_ * t, q = r - c_ * t;
  return 0.5 * c_ * (z0p(p) - z0p(q)) + 0.5 * (z1(p) + z1(q));
}

WaveField reference_cauchy(const CauchyDataPair& data, const RadialGrid& grid,
                           double c, const std::vector<double>& times) {
  if (!data.position.descriptor || !data.velocity.descriptor)
    throw std::invalid_argument("reference_cauchy: data must be descriptor-backed");
  if (times.empty()) throw std::invalid_argument("reference_cauchy: no times");
  const double T = times.back();
  const double reach = data_reach(data);
  if (grid.r_max < reach + c * T - 1e-9)
    throw std::invalid_argument("reference_cauchy: r_max smaller than support + c*T");

  HalfLineDalembert formula(data.position.descriptor, data.velocity.descriptor,
                            0.0, c, grid.r_max + c * T + grid.dr);
  WaveField f;
  f.problem.eps = 0.0;
  f.problem.bc = BoundaryKind::dirichlet_for_u;
  f.problem.data = data;
  f.problem.c = c;
  f.problem.T = T;
  f.grid = grid;
  f.j_eps = 0;
  f.dt = times.size() > 1 ? times[1] - times[0] : T;
  f.times = times;
  const int n = grid.n_points;
  f.z.resize(times.size() * static_cast<std::size_t>(n));
  f.zt.resize(times.size() * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = times[k];
    double* zrow = f.z.data() + k * n;
    double* ztrow = f.zt.data() + k * n;
    for (int j = 0; j < n; ++j) {
      zrow[j] = formula.z(t, grid.nodes[j]);
      ztrow[j] = formula.zt(t, grid.nodes[j]);
    }
    zrow[0] = 0.0;
  }
  return f;
}

WaveField reference_cauchy(const CauchyDataPair& data, const RadialGrid& grid,
                           double c, double T, int max_snapshots) {
  const int n_snap = std::max(2, max_snapshots);
  std::vector<double> times(n_snap);
  for (int k = 0; k < n_snap; ++k) times[k] = T * k / (n_snap - 1);
  return reference_cauchy(data, grid, c, times);
}

WaveField extend(const WaveField& field) {
  if (field.j_eps == 0 || field.extension != ExtensionRule::none)
    throw std::invalid_argument("extend: field has no unextended ball");
  WaveField out = field;
  const int n = field.grid.n_points;
  const int j0 = field.j_eps;
  const bool constant = field.problem.bc == BoundaryKind::neumann_for_u;
  out.extension = constant ? ExtensionRule::constant_on_ball : ExtensionRule::zero_on_ball;
  for (int k = 0; k < field.n_t(); ++k) {
    double* zrow = out.z.data() + static_cast<std::size_t>(k) * n;
    double* ztrow = out.zt.data() + static_cast<std::size_t>(k) * n;
    const double ub = constant ? zrow[j0] / field.grid.nodes[j0] : 0.0;
    const double ubt = constant ? ztrow[j0] / field.grid.nodes[j0] : 0.0;
    for (int j = 0; j < j0; ++j) {
      const double r = field.grid.nodes[j];
      zrow[j] = r * ub;
      ztrow[j] = r * ubt;
    }
  }
  return out;
}

EnergyReport energies(const WaveField& field) {
  const int n = field.grid.n_points;
  const int j0 = field.j_eps;
  const int m = n - j0;
  const double dr = field.grid.dr;
  const double c2 = field.problem.c * field.problem.c;
  const double fourpi = 4.0 * std::numbers::pi;

  EnergyReport rep;
  rep.times = field.times;
  rep.first_order.resize(field.n_t());
  rep.second_order.resize(field.n_t());
  rep.one_d_c.resize(field.n_t());
  rep.one_d_d.resize(field.n_t());

  std::vector<double> w1(m), w2(m), wc(m), wd(m);
  for (int k = 0; k < field.n_t(); ++k) {
    const auto zrow = field.z_row(k).subspan(j0);
    const auto ztrow = field.zt_row(k).subspan(j0);
    const auto zr = deriv1_fd4(zrow, dr);
    const auto zrr = deriv2_fd4(zrow, dr);
    const auto ztr = deriv1_fd4(ztrow, dr);
    for (int i = 0; i < m; ++i) {
      const double r = field.grid.nodes[j0 + i];
      double ur_r, utr_r, urr_r, ur;  // u_r * r, u_tr * r, u_rr * r, u_r
      if (r < 1e-12) {
        ur_r = utr_r = urr_r = ur = 0.0;
      } else {
        ur_r = zr[i] - zrow[i] / r;
        utr_r = ztr[i] - ztrow[i] / r;
        urr_r = zrr[i] - 2.0 * zr[i] / r + 2.0 * zrow[i] / (r * r);
        ur = ur_r / r;
      }
      w1[i] = ztrow[i] * ztrow[i] + c2 * ur_r * ur_r;
      w2[i] = utr_r * utr_r + c2 * (urr_r * urr_r + 2.0 * ur * ur);
      wc[i] = zr[i] * zr[i];
      wd[i] = zrr[i] * zrr[i];
    }
    rep.first_order[k] = 0.5 * fourpi * simpson(w1, dr);
    rep.second_order[k] = 0.5 * fourpi * simpson(w2, dr);
    rep.one_d_c[k] = simpson(wc, dr);
    rep.one_d_d[k] = simpson(wd, dr);
  }
  return rep;
}

std::vector<double> boundary_trace(const WaveField& field, TraceKind which) {
  if (field.j_eps <= 0)
    throw std::invalid_argument("boundary_trace: field has no inner boundary");
  const int j0 = field.j_eps;
  const double eps = field.grid.nodes[j0];
  const double dr = field.grid.dr;
  std::vector<double> out(field.n_t());
  for (int k = 0; k < field.n_t(); ++k) {
    const auto zrow = field.z_row(k);
    switch (which) {
      case TraceKind::u_t_at_eps:
        out[k] = field.zt_at(k, j0) / eps;
        break;
      case TraceKind::z_r_at_eps:
        out[k] = deriv1_left2(zrow[j0], zrow[j0 + 1], zrow[j0 + 2], dr);
        break;
      case TraceKind::u_r_at_eps: {
        const double zr = deriv1_left2(zrow[j0], zrow[j0 + 1], zrow[j0 + 2], dr);
        out[k] = (zr - zrow[j0] / eps) / eps;
        break;
      }
    }
  }
  return out;
}

double field_distance(const WaveField& a, const WaveField& b, SobolevOrder order) {
  if (!a.covers_all_space() || !b.covers_all_space())
    throw std::invalid_argument("field_distance: fields must be extended");
  if (!a.grid.same_as(b.grid))
    throw std::invalid_argument("field_distance: fields on different grids");
  if (a.n_t() != b.n_t())
    throw std::invalid_argument("field_distance: different time samples");
  for (int k = 0; k < a.n_t(); ++k)
    if (std::abs(a.times[k] - b.times[k]) > 1e-9 * (1.0 + std::abs(a.times[k])))
      throw std::invalid_argument("field_distance: different time samples");
  if (order == SobolevOrder::H2)
    throw std::invalid_argument("field_distance: only L2 and H1 are supported");

  RadialProfile diff = zero_profile(a.grid);
  double sup = 0.0;
  for (int k = 0; k < a.n_t(); ++k) {
    const auto ua = a.u_row(k);
    const auto ub = b.u_row(k);
    for (int j = 0; j < a.grid.n_points; ++j) diff.values[j] = ua[j] - ub[j];
    const NormReport nr = norms(diff, RegionSpec::all_space());
    sup = std::max(sup, order == SobolevOrder::L2 ? nr.l2 : nr.h1_full());
  }
  return sup;
}

}  // namespace radwave
