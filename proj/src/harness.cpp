#include "radwave/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "radwave/fd.hpp"
#include "radwave/quadrature.hpp"

namespace radwave {

namespace {

double data_reach(const StudySpec& spec) {
  if (!spec.phi || !spec.psi)
    throw std::invalid_argument("study: data descriptors are required");
  return std::max(effective_support(*spec.phi), effective_support(*spec.psi));
}

// Run fn(i) for i in [0, n) on up to `jobs` threads; results are indexed, so
// the assembly is deterministic.
void parallel_rungs(int n, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Composite-Simpson weight vector reproducing simpson() exactly.
std::vector<double> simpson_weights(std::size_t m, double h) {
  std::vector<double> w(m, 0.0);
  if (m < 2) return w;
  const std::size_t n = m - 1;
  if (n == 1) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  std::size_t stop = n;
  if (n % 2 != 0) {
    stop = n - 3;
    const double c38 = 3.0 * h / 8.0;
    w[stop] += c38;
    w[stop + 1] += 3.0 * c38;
    w[stop + 2] += 3.0 * c38;
    w[stop + 3] += c38;
  }
  if (stop > 0) {
    w[0] += h / 3.0;
    w[stop] += h / 3.0;
    for (std::size_t j = 1; j < stop; j += 2) w[j] += 4.0 * h / 3.0;
    for (std::size_t j = 2; j < stop; j += 2) w[j] += 2.0 * h / 3.0;
  }
  return w;
}

}  // namespace

void StudySpec::validate() const {
  if (!phi || !psi) throw std::invalid_argument("study: data descriptors are required");
  if (eps_ladder.empty()) throw std::invalid_argument("study: empty ladder");
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    if (eps_ladder[i] <= 0.0) throw std::invalid_argument("study: ladder entries must be positive");
    if (i > 0 && eps_ladder[i] >= eps_ladder[i - 1])
      throw std::invalid_argument("study: ladder must be strictly decreasing");
  }
  if (cells_per_eps < 8)
    throw std::invalid_argument("study: fewer than 8 cells per eps_min");
  if (c <= 0.0 || T <= 0.0) throw std::invalid_argument("study: need c > 0 and T > 0");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("study: cfl in (0,1]");
  const double dr = eps_min() / cells_per_eps;
  for (double eps : eps_ladder) {
    if (eps < 8.0 * dr - 1e-12)
      throw std::invalid_argument("study: ladder entry under-resolved (eps < 8*dr)");
    const double ratio = eps / dr;
    if (std::abs(ratio - std::lround(ratio)) > 1e-9)
      throw std::invalid_argument("study: ladder entry not aligned with the shared grid");
  }
}

RadialGrid study_grid(const StudySpec& spec, bool with_propagation) {
  const double dr = spec.eps_min() / spec.cells_per_eps;
  double r_needed = data_reach(spec) + spec.margin;
  if (with_propagation) r_needed += spec.c * spec.T;
  const int n_cells = static_cast<int>(std::ceil(r_needed / dr - 1e-12));
  return make_grid(n_cells * dr, n_cells + 1);
}

RateFit fit_rate(const std::vector<RatePoint>& rows) {
  std::vector<double> x, y;
  for (const auto& p : rows) {
    if (p.value > 1e-14) {
      x.push_back(std::log(p.eps));
      y.push_back(std::log(p.value));
    }
  }
  if (x.size() < 3)
    throw std::runtime_error("fit_rate: insufficient data (< 3 usable rows)");
  const double n = static_cast<double>(x.size());
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) { xm += x[i]; ym += y[i]; }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  const double icpt = ym - fit.slope * xm;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (icpt + fit.slope * x[i]);
    ss += e * e;
  }
  fit.rms_residual = std::sqrt(ss / n);
  fit.used_rows = static_cast<int>(x.size());
  return fit;
}

const QuantitySeries& ConvergenceReport::q(const std::string& name) const {
  for (const auto& s : quantities)
    if (s.name == name) return s;
  throw std::invalid_argument("report: no quantity named " + name);
}

SpaceTimeTestFunction::SpaceTimeTestFunction(double T, int time_power,
                                             FunctionPtr radial)
    : T_(T), p_(time_power), radial_(std::move(radial)) {
  if (T <= 0.0 || p_ < 2)
    throw std::invalid_argument("test function: need T > 0 and time power >= 2");
  if (!radial_ || !std::isfinite(radial_->support_radius()))
    throw std::invalid_argument("test function: radial part must be compactly supported");
}

double SpaceTimeTestFunction::a(double t) const {
  const double x = t / T_;
  if (std::abs(x) >= 1.0) return 0.0;
  return std::pow(1.0 - x * x, p_);
}

double SpaceTimeTestFunction::a_dt(double t) const {
  const double x = t / T_;
  if (std::abs(x) >= 1.0) return 0.0;
  return -2.0 * p_ * x / T_ * std::pow(1.0 - x * x, p_ - 1);
}

double SpaceTimeTestFunction::a_dtt(double t) const {
  const double x = t / T_;
  if (std::abs(x) >= 1.0) return 0.0;
  const double u = 1.0 - x * x;
  double s = -2.0 * p_ / (T_ * T_) * std::pow(u, p_ - 1);
  if (p_ >= 2)
    s += 4.0 * p_ * (p_ - 1) * x * x / (T_ * T_) * std::pow(u, p_ - 2);
  return s;
}

SpaceTimeTestFunction default_test_function(const StudySpec& spec) {
  return SpaceTimeTestFunction(spec.T, spec.time_power,
                               poly_bump(spec.test_radius, spec.test_poly_k));
}

double weak_form_residual(const WaveField& field, const CauchyDataPair& data,
                          const SpaceTimeTestFunction& V, WeakForm form) {
  if (!field.covers_all_space())
    throw std::invalid_argument("weak_form_residual: field must cover all space");
  const RadialGrid& g = field.grid;
  const double c = field.problem.c;
  const double dr = g.dr;
  const double fourpi = 4.0 * std::numbers::pi;
  const int n = g.n_points;
  const int j_sup = std::min(
      n - 1, static_cast<int>(std::ceil(V.support_radius() / dr)) + 2);

  const int K = field.n_t();
  if (K < 3) throw std::invalid_argument("weak_form_residual: too few snapshots");
  const double dt = field.times[1] - field.times[0];
  for (int k = 1; k < K; ++k)
    if (std::abs(field.times[k] - field.times[k - 1] - dt) > 1e-9 * dt)
      throw std::invalid_argument("weak_form_residual: nonuniform snapshot times");

  std::vector<double> integrand(j_sup + 1), series(K);
  for (int k = 0; k < K; ++k) {
    const double t = field.times[k];
    const auto u = field.u_row(k);
    if (form == WeakForm::H1_form) {
      const auto ur = deriv1_fd4(u, dr);
      const double at = V.a(t), att = V.a_dtt(t);
      for (int j = 0; j <= j_sup; ++j) {
        const double r = g.nodes[j];
        integrand[j] =
            (u[j] * att * V.b(r) + c * c * ur[j] * at * V.b_dr(r)) * r * r;
      }
    } else {
      for (int j = 0; j <= j_sup; ++j) {
        const double r = g.nodes[j];
        integrand[j] = u[j] * V.box(t, r, c) * r * r;
      }
    }
    series[k] = fourpi * simpson(integrand, dr);
  }
  const double spacetime = simpson(series, dt);

  // initial-data terms int Phi V_t(0) - Psi V(0) dx
  double data_term;
  const double a0 = V.a(0.0), a0t = V.a_dt(0.0);
  if (data.position.descriptor && data.velocity.descriptor) {
    const auto& phi = *data.position.descriptor;
    const auto& psi = *data.velocity.descriptor;
    data_term = fourpi *
                cumulative_gauss(
                    [&](double r) {
                      return (phi.value(r) * a0t - psi.value(r) * a0) * V.b(r) *
                             r * r;
                    },
                    0.0, dr, static_cast<std::size_t>(j_sup))
                    .back();
  } else {
    for (int j = 0; j <= j_sup; ++j) {
      const double r = g.nodes[j];
      integrand[j] = (data.position.values[j] * a0t -
                      data.velocity.values[j] * a0) * V.b(r) * r * r;
    }
    data_term = fourpi * simpson(integrand, dr);
  }
  return spacetime + data_term;
}

ConvergenceReport data_rate_study(const StudySpec& spec) {
  spec.validate();
  const RadialGrid grid = study_grid(spec, false);
  const CauchyDataPair base = make_pair(spec.phi, spec.psi, grid, spec.tag);

  QuantitySeries l2{"l2_distance", {}, {}, {}};
  QuantitySeries h1{"h1_distance", {}, {}, {}};
  QuantitySeries h2{"h2_distance", {}, {}, {}};
  QuantitySeries h2n{"h2_norm", {}, {}, {}};
  const int n = static_cast<int>(spec.eps_ladder.size());
  l2.rows.resize(n);
  h1.rows.resize(n);
  h2.rows.resize(n);
  h2n.rows.resize(n);

  parallel_rungs(n, spec.jobs, [&](int i) {
    const double eps = spec.eps_ladder[i];
    const CauchyDataPair built = (spec.bc == BoundaryKind::neumann_for_u)
                                     ? neumann_data(base, eps)
                                     : dirichlet_data(base, eps);
    l2.rows[i] = {eps, pair_distance(built, base, SobolevOrder::L2)};
    h1.rows[i] = {eps, pair_distance(built, base, SobolevOrder::H1)};
    h2.rows[i] = {eps, pair_distance(built, base, SobolevOrder::H2)};
    h2n.rows[i] = {eps, pair_norm(built, SobolevOrder::H2)};
  });

  if (spec.bc == BoundaryKind::neumann_for_u) {
    l2.theory_slope = 2.0;
    h1.theory_slope = 1.0;
  } else {
    h2.theory_slope = -0.5;
  }
  for (QuantitySeries* s : {&l2, &h1, &h2, &h2n}) {
    try {
      s->fit = fit_rate(s->rows);
    } catch (const std::runtime_error&) {
      s->fit.reset();
    }
  }
  return ConvergenceReport{{l2, h1, h2, h2n}};
}

ConvergenceReport solution_convergence_study(const StudySpec& spec) {
  spec.validate();
  const RadialGrid grid = study_grid(spec, true);
  const CauchyDataPair base = make_pair(spec.phi, spec.psi, grid, spec.tag);
  const int n_cells = grid.n_points - 1;
  const bool neumann = spec.bc == BoundaryKind::neumann_for_u;

  const std::vector<double> times =
      planned_times(spec.T, grid.dr, spec.c, spec.cfl, spec.max_snapshots);
  const WaveField ref = reference_cauchy(base, grid, spec.c, times);

  const int n = static_cast<int>(spec.eps_ladder.size());
  QuantitySeries dist{neumann ? "h1_distance" : "l2_distance", {}, {}, {}};
  QuantitySeries trace{"trace_ratio", {}, {}, {}};
  dist.rows.resize(n);
  if (neumann) trace.rows.resize(n);

  parallel_rungs(n, spec.jobs, [&](int i) {
    const double eps = spec.eps_ladder[i];
    ExteriorProblem prob;
    prob.eps = eps;
    prob.bc = spec.bc;
    prob.data = neumann ? neumann_data(base, eps) : dirichlet_data(base, eps);
    prob.c = spec.c;
    prob.T = spec.T;
    const WaveField field = extend(solve(prob, n_cells, spec.cfl, spec.max_snapshots));
    dist.rows[i] = {eps, field_distance(field, ref,
                                        neumann ? SobolevOrder::H1 : SobolevOrder::L2)};
    if (neumann) {
      const auto ut = boundary_trace(field, TraceKind::u_t_at_eps);
      double sup = 0.0;
      for (double v : ut) sup = std::max(sup, std::abs(v));
      const double a_eps = pair_norm(prob.data, SobolevOrder::H2);
      trace.rows[i] = {eps, sup * std::sqrt(eps) / a_eps};
    }
  });

  try {
    dist.fit = fit_rate(dist.rows);
  } catch (const std::runtime_error&) {
    dist.fit.reset();
  }
  ConvergenceReport rep;
  rep.quantities.push_back(dist);
  if (neumann) rep.quantities.push_back(trace);
  return rep;
}

namespace {

// One streaming Dirichlet rung: march the exterior problem and accumulate the
// boundary term and the weak-form residual at the native time step, without
// storing the field.
ResidualRung residual_rung(const StudySpec& spec, const RadialGrid& grid,
                           const CauchyDataPair& base,
                           const SpaceTimeTestFunction& V, double eps) {
  const CauchyDataPair data = dirichlet_data(base, eps);
  const double c = spec.c, dr = grid.dr;
  const int n = grid.n_points;
  const int j0 = grid.node_index(eps);
  const double fourpi = 4.0 * std::numbers::pi;

  // native step count; cfl = 1 on the dyadic grid keeps c*dt = dr exactly
  int n_steps = static_cast<int>(std::ceil(spec.T / (spec.cfl * dr / c) - 1e-9));
  n_steps += n_steps % 2;  // even count for plain Simpson in time
  const double dt = spec.T / n_steps;
  const double lam2 = (c * dt / dr) * (c * dt / dr);
  const bool unit_cfl = std::abs(c * dt - dr) <= 1e-12 * dr;

  std::vector<double> z0(n, 0.0), z1(n, 0.0);
  for (int j = j0; j < n; ++j) {
    const double r = grid.nodes[j];
    z0[j] = r * data.position.descriptor->value(r);
    z1[j] = r * data.velocity.descriptor->value(r);
  }
  z0[j0] = z1[j0] = 0.0;

  const int j_sup = std::min(
      n - 1, static_cast<int>(std::ceil(V.support_radius() / dr)) + 2);
  const auto wgt = simpson_weights(static_cast<std::size_t>(j_sup - j0 + 1), dr);
  std::vector<double> br(j_sup - j0 + 1), blap(j_sup - j0 + 1);
  for (int j = j0; j <= j_sup; ++j) {
    const double r = grid.nodes[j];
    br[j - j0] = V.b(r) * r;
    blap[j - j0] = V.b_lap(r) * r;
  }

  std::vector<double> g(n_steps + 1), s1(n_steps + 1), s2(n_steps + 1);
  auto sample = [&](int level, const std::vector<double>& zl) {
    // d_r z at the boundary through the vanishing even derivatives of the
    // exact Dirichlet solution: z(eps) = z_rr(eps) = z_rrrr(eps) = 0
    const double zr = (35.0 / 24.0 * zl[j0 + 1] - 4.0 / 15.0 * zl[j0 + 2] +
                       1.0 / 40.0 * zl[j0 + 3]) / dr;
    g[level] = V.a(level * dt) * zr;
    double a1 = 0.0, a2 = 0.0;
    for (int j = j0; j <= j_sup; ++j) {
      a1 += wgt[j - j0] * zl[j] * br[j - j0];
      a2 += wgt[j - j0] * zl[j] * blap[j - j0];
    }
    s1[level] = fourpi * a1;
    s2[level] = fourpi * a2;
  };

  std::vector<double> zprev = z0, zcur(n, 0.0), znext(n, 0.0);
  if (unit_cfl) {
    const auto& psi = *data.velocity.descriptor;
    const auto mass =
        cumulative_gauss([&](double s) { return s * psi.value(s); },
                         grid.nodes[j0], dr, static_cast<std::size_t>(n - 1 - j0));
    for (int j = j0 + 1; j < n - 1; ++j)
      zcur[j] = 0.5 * (z0[j + 1] + z0[j - 1]) +
                (mass[j + 1 - j0] - mass[j - 1 - j0]) / (2.0 * c);
  } else {
    const auto& phi = *data.position.descriptor;
    for (int j = j0 + 1; j < n - 1; ++j) {
      const double r = grid.nodes[j];
      const double z0rr = 2.0 * phi.deriv(r) + r * phi.second(r);
      zcur[j] = z0[j] + dt * z1[j] + 0.5 * dt * dt * c * c * z0rr;
    }
  }
  sample(0, z0);
  sample(1, zcur);
  for (int k = 2; k <= n_steps; ++k) {
    for (int j = j0 + 1; j < n - 1; ++j)
      znext[j] = 2.0 * zcur[j] - zprev[j] +
                 lam2 * (zcur[j + 1] - 2.0 * zcur[j] + zcur[j - 1]);
    znext[j0] = 0.0;
    znext[n - 1] = 0.0;
    std::swap(zprev, zcur);
    std::swap(zcur, znext);
    sample(k, zcur);
  }

  ResidualRung rung;
  rung.eps = eps;
  rung.boundary = -fourpi * c * c * eps * V.b(eps) * simpson(g, dt);

  std::vector<double> wk(n_steps + 1);
  for (int k = 0; k <= n_steps; ++k)
    wk[k] = V.a_dtt(k * dt) * s1[k] - c * c * V.a(k * dt) * s2[k];
  const double spacetime = simpson(wk, dt);
  const auto& phi = *data.position.descriptor;
  const auto& psi = *data.velocity.descriptor;
  const double a0 = V.a(0.0), a0t = V.a_dt(0.0);
  const double data_term =
      fourpi * cumulative_gauss(
                   [&](double r) {
                     return (phi.value(r) * a0t - psi.value(r) * a0) * V.b(r) *
                            r * r;
                   },
                   grid.nodes[j0], dr, static_cast<std::size_t>(j_sup - j0))
                   .back();
  rung.weak = spacetime + data_term;
  rung.gap = std::abs(rung.weak - rung.boundary) /
             std::max({std::abs(rung.weak), std::abs(rung.boundary), 1e-300});
  return rung;
}

}  // namespace

ResidualStudyResult residual_study(const StudySpec& spec,
                                   const SpaceTimeTestFunction& V) {
  spec.validate();
  if (spec.bc != BoundaryKind::dirichlet_for_u)
    throw std::invalid_argument("residual_study: Dirichlet boundary kind required");
  if (V.a(V.horizon()) != 0.0 || V.a_dt(V.horizon()) != 0.0)
    throw std::invalid_argument("residual_study: test function must vanish at the horizon");
  const RadialGrid grid = study_grid(spec, true);
  const CauchyDataPair base = make_pair(spec.phi, spec.psi, grid, spec.tag);

  ResidualStudyResult out;
  const int n = static_cast<int>(spec.eps_ladder.size());
  out.rungs.resize(n);
  parallel_rungs(n, spec.jobs, [&](int i) {
    out.rungs[i] = residual_rung(spec, grid, base, V, spec.eps_ladder[i]);
  });

  QuantitySeries res{"boundary_residual", {}, {}, 0.75};
  QuantitySeries gap{"identity_gap", {}, {}, {}};
  for (const auto& r : out.rungs) {
    res.rows.push_back({r.eps, std::abs(r.boundary)});
    gap.rows.push_back({r.eps, r.gap});
  }
  try {
    res.fit = fit_rate(res.rows);
  } catch (const std::runtime_error&) {
    res.fit.reset();
  }
  out.report.quantities = {res, gap};
  return out;
}

PairDiagnostics cauchy_pair_diagnostics(const StudySpec& spec, int i_n, int i_m) {
  spec.validate();
  if (spec.bc != BoundaryKind::neumann_for_u)
    throw std::invalid_argument("pair diagnostics: Neumann boundary kind required");
  const int n_l = static_cast<int>(spec.eps_ladder.size());
  if (i_m < 0 || i_n < i_m || i_n >= n_l)
    throw std::invalid_argument("pair diagnostics: invalid ladder indices");

  const RadialGrid grid = study_grid(spec, true);
  const CauchyDataPair base = make_pair(spec.phi, spec.psi, grid, spec.tag);
  const int n_cells = grid.n_points - 1;

  auto solve_rung = [&](int i) {
    ExteriorProblem prob;
    prob.eps = spec.eps_ladder[i];
    prob.bc = spec.bc;
    prob.data = neumann_data(base, prob.eps);
    prob.c = spec.c;
    prob.T = spec.T;
    return extend(solve(prob, n_cells, spec.cfl, spec.max_snapshots));
  };
  const WaveField fn = solve_rung(i_n);
  PairDiagnostics diag;
  diag.times = fn.times;
  const int K = fn.n_t();
  diag.energy.assign(K, 0.0);
  diag.l2_half.assign(K, 0.0);
  if (i_n != i_m) {
    const WaveField fm = solve_rung(i_m);
    const double fourpi = 4.0 * std::numbers::pi;
    const double c2 = spec.c * spec.c;
    std::vector<double> du(grid.n_points), w(grid.n_points);
    for (int k = 0; k < K; ++k) {
      const auto un = fn.u_row(k), um = fm.u_row(k);
      const auto utn = fn.ut_row(k), utm = fm.ut_row(k);
      for (int j = 0; j < grid.n_points; ++j) du[j] = un[j] - um[j];
      const auto dur = deriv1_fd4(du, grid.dr);
      for (int j = 0; j < grid.n_points; ++j) {
        const double r = grid.nodes[j];
        const double dut = utn[j] - utm[j];
        w[j] = (dut * dut + c2 * dur[j] * dur[j]) * r * r;
      }
      diag.energy[k] = 0.5 * fourpi * simpson(w, grid.dr);
      for (int j = 0; j < grid.n_points; ++j) {
        const double r = grid.nodes[j];
        w[j] = du[j] * du[j] * r * r;
      }
      diag.l2_half[k] = 0.5 * fourpi * simpson(w, grid.dr);
    }
  }
  for (int k = 0; k < K; ++k) {
    diag.sup_energy = std::max(diag.sup_energy, diag.energy[k]);
    diag.sup_l2_half = std::max(diag.sup_l2_half, diag.l2_half[k]);
  }
  return diag;
}

}  // namespace radwave
