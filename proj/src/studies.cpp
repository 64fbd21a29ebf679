#include "radwave/studies.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "radwave/csv.hpp"

namespace fs = std::filesystem;

namespace radwave {

bool StudyOutcome::pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& study_names() {
  static const std::vector<std::string> names = {
      "data_rates_neumann",          "data_rates_dirichlet",
      "solution_convergence_neumann", "solution_convergence_dirichlet",
      "residual_decay",              "energy_conservation",
      "hardy",                       "weak_form"};
  return names;
}

namespace {

double median_value(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int monotone_violations(const std::vector<RatePoint>& rows) {
  int bad = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i + 1].value >= rows[i].value) ++bad;
  return bad;
}

CriterionResult in_window(const std::string& name, double measured, double lo,
                          double hi) {
  CriterionResult c;
  c.name = name;
  c.measured = measured;
  std::ostringstream os;
  os << "[" << lo << "," << hi << "]";
  c.window = os.str();
  c.pass = measured >= lo && measured <= hi;
  return c;
}

CriterionResult at_most(const std::string& name, double measured, double bound) {
  CriterionResult c;
  c.name = name;
  c.measured = measured;
  std::ostringstream os;
  os << "<= " << bound;
  c.window = os.str();
  c.pass = measured <= bound;
  return c;
}

CriterionResult at_least(const std::string& name, double measured, double bound) {
  CriterionResult c;
  c.name = name;
  c.measured = measured;
  std::ostringstream os;
  os << ">= " << bound;
  c.window = os.str();
  c.pass = measured >= bound;
  return c;
}

void write_summary(const std::string& path, const StudyOutcome& outcome) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "study " << outcome.study << "\n";
  for (const auto& c : outcome.criteria)
    out << "criterion " << c.name << " measured " << format_real(c.measured)
        << " window " << c.window << " " << (c.pass ? "PASS" : "FAIL") << "\n";
}

// Smallest power-of-two box that contains the data reach plus propagation;
// dyadic extents keep every dyadic eps on a grid node.
double dyadic_extent(double needed) {
  double r = 1.0;
  while (r < needed) r *= 2.0;
  return r;
}

StudyOutcome data_rates_outcome(const std::string& name, const StudyConfig& cfg,
                                BoundaryKind bc, const std::string& out_dir,
                                int grid_scale, int jobs) {
  StudySpec spec = cfg.study_spec(bc);
  spec.cells_per_eps *= grid_scale;
  spec.jobs = jobs;
  const ConvergenceReport rep = data_rate_study(spec);
  write_rates_csv(out_dir + "/" + name + "_rates.csv", rep);

  StudyOutcome out;
  out.study = name;
  if (bc == BoundaryKind::neumann_for_u) {
    out.criteria.push_back(
        in_window("neumann_l2_rate", rep.q("l2_distance").fit->slope, 1.8, 2.2));
    out.criteria.push_back(
        in_window("neumann_h1_rate", rep.q("h1_distance").fit->slope, 0.8, 1.2));
    // "no blowup" witness: a convergent (decaying) ladder keeps its maximum at
    // the largest radius, so the max is compared against both the ladder
    // median and the first rung
    std::vector<double> h2;
    for (const auto& r : rep.q("h2_distance").rows) h2.push_back(r.value);
    const double ref = std::max(median_value(h2), h2.front());
    const double ratio = *std::max_element(h2.begin(), h2.end()) / ref;
    out.criteria.push_back(at_most("neumann_h2_bounded", ratio, 2.0));
  } else {
    out.criteria.push_back(
        at_least("dirichlet_h1_rate", rep.q("h1_distance").fit->slope, 0.4));
    out.criteria.push_back(in_window("dirichlet_h2_blowup_rate",
                                     rep.q("h2_distance").fit->slope, -0.8, -0.2));
  }
  return out;
}

StudyOutcome solution_outcome(const std::string& name, const StudyConfig& cfg,
                              BoundaryKind bc, const std::string& out_dir,
                              int grid_scale, int jobs) {
  StudySpec spec = cfg.study_spec(bc);
  spec.cells_per_eps *= grid_scale;
  spec.jobs = jobs;
  const ConvergenceReport rep = solution_convergence_study(spec);
  write_rates_csv(out_dir + "/" + name + "_rates.csv", rep);

  StudyOutcome out;
  out.study = name;
  if (bc == BoundaryKind::neumann_for_u) {
    out.criteria.push_back(
        at_most("neumann_solution_h1_monotone",
                monotone_violations(rep.q("h1_distance").rows), 1.0));
    const auto& trace = rep.q("trace_ratio").rows;
    double max_ratio = 0.0;
    for (const auto& r : trace) max_ratio = std::max(max_ratio, r.value);
    out.criteria.push_back(
        at_most("trace_bound_ratio", max_ratio / trace.front().value, 2.0));
  } else {
    out.criteria.push_back(
        at_most("dirichlet_solution_l2_monotone",
                monotone_violations(rep.q("l2_distance").rows), 1.0));
  }
  return out;
}

StudyOutcome residual_outcome(const StudyConfig& cfg, const std::string& out_dir,
                              int grid_scale, int jobs) {
  StudySpec spec = cfg.residual_spec();
  spec.cells_per_eps *= grid_scale;
  spec.jobs = jobs;
  const SpaceTimeTestFunction V = default_test_function(spec);
  const ResidualStudyResult res = residual_study(spec, V);
  write_rates_csv(out_dir + "/residual_decay_rates.csv", res.report);

  StudyOutcome out;
  out.study = "residual_decay";
  out.criteria.push_back(at_least(
      "residual_rate", res.report.q("boundary_residual").fit->slope, 0.7));
  double max_gap = 0.0;
  for (const auto& r : res.rungs) max_gap = std::max(max_gap, r.gap);
  out.criteria.push_back(at_most("residual_weak_identity", max_gap, 1e-6));
  return out;
}

struct EnergyDrifts {
  double first = 0.0;
  double second = 0.0;
};

EnergyDrifts energy_drifts(const EnergyReport& rep) {
  EnergyDrifts d;
  for (std::size_t k = 0; k < rep.times.size(); ++k) {
    d.first = std::max(d.first, std::abs(rep.first_order[k] - rep.first_order[0]) /
                                    rep.first_order[0]);
    d.second = std::max(d.second,
                        std::abs(rep.second_order[k] - rep.second_order[0]) /
                            rep.second_order[0]);
  }
  return d;
}

StudyOutcome energy_outcome(const StudyConfig& cfg, const std::string& out_dir,
                            int grid_scale, int /*jobs*/) {
  const StudySpec spec = cfg.study_spec(BoundaryKind::neumann_for_u);
  const double eps = cfg.get_real("energy.eps");
  const int n_cells = cfg.get_int("energy.n_cells") * grid_scale;
  const double reach =
      std::max(effective_support(*spec.phi), effective_support(*spec.psi));
  const RadialGrid grid =
      make_grid(dyadic_extent(reach + spec.c * spec.T + spec.margin), n_cells + 1);

  auto run = [&](int cells) {
    const RadialGrid g = make_grid(grid.r_max, cells + 1);
    const CauchyDataPair base = make_pair(spec.phi, spec.psi, g, spec.tag);
    ExteriorProblem prob;
    prob.eps = eps;
    prob.bc = BoundaryKind::neumann_for_u;
    prob.data = neumann_data(base, eps);
    prob.c = spec.c;
    prob.T = spec.T;
    return energies(solve(prob, cells, spec.cfl, spec.max_snapshots));
  };

  const EnergyReport base_rep = run(n_cells);
  write_energy_csv(out_dir + "/energy_conservation.csv", base_rep);
  const EnergyDrifts coarse = energy_drifts(base_rep);
  const EnergyDrifts fine = energy_drifts(run(2 * n_cells));
  const double shrink =
      std::min(coarse.first / fine.first, coarse.second / fine.second);

  StudyOutcome out;
  out.study = "energy_conservation";
  out.criteria.push_back(at_most("first_order_drift", coarse.first, 1e-5));
  out.criteria.push_back(at_most("second_order_drift", coarse.second, 1e-5));
  out.criteria.push_back(at_least("drift_refinement_shrink", shrink, 3.0));
  return out;
}

StudyOutcome hardy_outcome(const StudyConfig& /*cfg*/, const std::string& out_dir,
                           int grid_scale, int /*jobs*/) {
  struct Entry {
    std::string label;
    FunctionPtr fn;
  };
  const int n_base = 100001 * grid_scale;
  std::vector<Entry> entries = {
      {"gaussian_bump(1)", gaussian_bump(1.0)},
      {"poly_bump(1,4)", poly_bump(1.0, 4)},
      {"exp_decay(1)", exp_decay(1.0)},
      {"ring_bump(2,1,4)", ring_bump(2.0, 1.0, 4)},
  };

  std::ofstream csv(out_dir + "/hardy.csv");
  if (!csv) throw std::runtime_error("cannot write hardy.csv");
  csv << "family,ratio,ball_ratio\n";

  double max_ratio = 0.0, exp_ratio = 0.0;
  auto measure = [&](const std::string& label, const RadialProfile& prof) {
    const double ratio = hardy_ratio(prof);
    const double ball = prof.grid.r_max >= 1.0 ? hardy_ball_ratio(prof) : 0.0;
    csv << label << "," << format_real(ratio) << "," << format_real(ball) << "\n";
    max_ratio = std::max(max_ratio, ratio);
    if (label == "exp_decay(1)") exp_ratio = ratio;
  };
  for (const auto& e : entries) {
    const double r_max = dyadic_extent(effective_support(*e.fn) + 0.5);
    measure(e.label, sample_profile(e.fn, make_grid(r_max, n_base)));
  }
  {
    // unbounded-at-origin H^1 family, half-cell origin regularization
    const RadialGrid g = make_grid(2.0, n_base);
    measure("hardy_edge(0.25,1)",
            sample_profile(hardy_edge(0.25, 1.0, 0.5 * g.dr), g));
  }

  StudyOutcome out;
  out.study = "hardy";
  out.criteria.push_back(at_most("hardy_bound_all_families", max_ratio, 2.001));
  out.criteria.push_back(at_most("hardy_exp_value",
                                 std::abs(exp_ratio - std::sqrt(2.0)), 1e-3));
  return out;
}

StudyOutcome weak_form_outcome(const StudyConfig& cfg, const std::string& out_dir,
                               int grid_scale, int /*jobs*/) {
  const StudySpec spec = cfg.study_spec(BoundaryKind::neumann_for_u);
  const int n_cells = cfg.get_int("energy.n_cells") * grid_scale;
  const double reach =
      std::max(effective_support(*spec.phi), effective_support(*spec.psi));
  const RadialGrid grid =
      make_grid(dyadic_extent(reach + spec.c * spec.T + spec.margin), n_cells + 1);
  const CauchyDataPair base = make_pair(spec.phi, spec.psi, grid, spec.tag);
  const WaveField ref =
      reference_cauchy(base, grid, spec.c, spec.T, spec.max_snapshots);
  const SpaceTimeTestFunction V = default_test_function(spec);
  const double h1 =
      std::abs(weak_form_residual(ref, base, V, WeakForm::H1_form));
  const double l2 =
      std::abs(weak_form_residual(ref, base, V, WeakForm::L2_form));

  std::ofstream csv(out_dir + "/weak_form.csv");
  if (!csv) throw std::runtime_error("cannot write weak_form.csv");
  csv << "form,residual\n";
  csv << "H1_form," << format_real(h1) << "\n";
  csv << "L2_form," << format_real(l2) << "\n";

  StudyOutcome out;
  out.study = "weak_form";
  out.criteria.push_back(at_most("weak_h1_defect", h1, 1e-6));
  out.criteria.push_back(at_most("weak_l2_defect", l2, 1e-6));
  return out;
}

}  // namespace

StudyOutcome run_named_study(const std::string& name, const StudyConfig& cfg,
                             const std::string& out_dir, int grid_scale,
                             int jobs) {
  if (grid_scale < 1) throw std::invalid_argument("grid scale must be >= 1");
  fs::create_directories(out_dir);
  const auto t0 = std::chrono::steady_clock::now();
  StudyOutcome out;
  if (name == "data_rates_neumann")
    out = data_rates_outcome(name, cfg, BoundaryKind::neumann_for_u, out_dir,
                             grid_scale, jobs);
  else if (name == "data_rates_dirichlet")
    out = data_rates_outcome(name, cfg, BoundaryKind::dirichlet_for_u, out_dir,
                             grid_scale, jobs);
  else if (name == "solution_convergence_neumann")
    out = solution_outcome(name, cfg, BoundaryKind::neumann_for_u, out_dir,
                           grid_scale, jobs);
  else if (name == "solution_convergence_dirichlet")
    out = solution_outcome(name, cfg, BoundaryKind::dirichlet_for_u, out_dir,
                           grid_scale, jobs);
  else if (name == "residual_decay")
    out = residual_outcome(cfg, out_dir, grid_scale, jobs);
  else if (name == "energy_conservation")
    out = energy_outcome(cfg, out_dir, grid_scale, jobs);
  else if (name == "hardy")
    out = hardy_outcome(cfg, out_dir, grid_scale, jobs);
  else if (name == "weak_form")
    out = weak_form_outcome(cfg, out_dir, grid_scale, jobs);
  else
    throw std::invalid_argument("unknown study: " + name);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_summary(out_dir + "/" + name + "_summary.txt", out);
  return out;
}

std::vector<std::string> validate_setup(const StudyConfig& cfg) {
  std::vector<std::string> violations;

  try {
    cfg.study_spec(BoundaryKind::neumann_for_u).validate();
  } catch (const std::exception& e) {
    violations.push_back(std::string("study spec: ") + e.what());
  }
  try {
    cfg.residual_spec().validate();
  } catch (const std::exception& e) {
    violations.push_back(std::string("residual spec: ") + e.what());
  }

  const WarpValidation warp = validate_warp(10000);
  if (!warp.pass) violations.push_back("warp function fails beta properties");

  // randomized norm sanity: triangle inequality and homogeneity on smooth
  // random profiles
  std::mt19937 rng(static_cast<unsigned>(cfg.get_int("run.seed")));
  std::uniform_real_distribution<double> amp(-1.0, 1.0), width(0.5, 3.0);
  const RadialGrid g = make_grid(8.0, 2001);
  for (int trial = 0; trial < 5; ++trial) {
    auto rand_profile = [&] {
      FunctionPtr f = linear_combination(amp(rng), gaussian_bump(width(rng)),
                                         amp(rng), gaussian_bump(width(rng)));
      return sample_profile(f, g);
    };
    const RadialProfile a = rand_profile(), b = rand_profile();
    RadialProfile sum = a;
    sum.descriptor = linear_combination(1.0, a.descriptor, 1.0, b.descriptor);
    for (int j = 0; j < g.n_points; ++j) sum.values[j] = a.values[j] + b.values[j];
    const auto na = norms(a, RegionSpec::all_space());
    const auto nb = norms(b, RegionSpec::all_space());
    const auto ns = norms(sum, RegionSpec::all_space());
    if (ns.l2 > na.l2 + nb.l2 + 1e-10 * (na.l2 + nb.l2))
      violations.push_back("norm triangle inequality violated");
  }
  return violations;
}

int consolidate_report(const std::string& out_dir) {
  if (!fs::is_directory(out_dir)) return 0;
  std::vector<fs::path> rates, summaries;
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > 10 && name.substr(name.size() - 10) == "_rates.csv")
      rates.push_back(entry.path());
    else if (name.size() > 12 && name.substr(name.size() - 12) == "_summary.txt")
      summaries.push_back(entry.path());
  }
  std::sort(rates.begin(), rates.end());
  std::sort(summaries.begin(), summaries.end());
  int consumed = 0;

  for (const auto& path : rates) {
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);  // header
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string quantity, eps_s, value_s;
      std::getline(ls, quantity, ',');
      std::getline(ls, eps_s, ',');
      std::getline(ls, value_s, ',');
      if (quantity.empty() || eps_s.empty() || value_s.empty()) continue;
      series[quantity].emplace_back(std::stod(eps_s), std::stod(value_s));
    }
    const std::string study =
        path.filename().string().substr(0, path.filename().string().size() - 10);
    for (const auto& [quantity, rows] : series) {
      std::ofstream out(out_dir + "/" + study + "." + quantity + ".dat");
      out << "# log_eps log_value\n";
      for (const auto& [eps, value] : rows) {
        if (value <= 0.0) continue;
        out << format_real(std::log(eps)) << " " << format_real(std::log(value))
            << "\n";
      }
      ++consumed;
    }
  }

  if (!summaries.empty()) {
    std::ofstream out(out_dir + "/report.txt");
    for (const auto& path : summaries) {
      std::ifstream in(path);
      out << in.rdbuf() << "\n";
      ++consumed;
    }
  }
  return consumed;
}

}  // namespace radwave
