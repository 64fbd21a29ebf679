// Command-line driver: validate a configuration, run the named studies, and
// consolidate run artifacts into plot data and a text report.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "radwave/studies.hpp"

namespace {

radwave::StudyConfig load_config(const std::string& path) {
  if (path.empty()) return radwave::StudyConfig::defaults();
  return radwave::StudyConfig::load(path);
}

void print_outcome(const radwave::StudyOutcome& outcome) {
  for (const auto& c : outcome.criteria)
    std::printf("  %-34s measured %-12.5g window %-12s %s\n", c.name.c_str(),
                c.measured, c.window.c_str(), c.pass ? "PASS" : "FAIL");
  std::printf("  wall time %.2f s\n", outcome.wall_seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radial wave laboratory: exterior-solution studies"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  int jobs = 1;
  int grid_scale = 1;
  app.add_option("--config", config_path, "configuration file (key = value)");
  app.add_option("--out", out_dir, "output directory for artifacts");
  app.add_option("--jobs", jobs, "ladder parallelism")->check(CLI::PositiveNumber);
  app.add_option("--grid-scale", grid_scale, "multiply grid resolution")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "structural validation of the setup");
  auto* run = app.add_subcommand("run", "run one study and evaluate its criteria");
  std::string study;
  run->add_option("study", study, "study name")->required();
  auto* report = app.add_subcommand("report", "emit plot data and a consolidated summary");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      radwave::StudyConfig cfg;
      try {
        cfg = load_config(config_path);
      } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
      }
      const auto violations = radwave::validate_setup(cfg);
      for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
      if (violations.empty()) std::cout << "validation passed\n";
      return violations.empty() ? 0 : 1;
    }

    if (run->parsed()) {
      const auto& names = radwave::study_names();
      if (std::find(names.begin(), names.end(), study) == names.end()) {
        std::cerr << "unknown study '" << study << "'; available:";
        for (const auto& n : names) std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
      }
      radwave::StudyConfig cfg;
      try {
        cfg = load_config(config_path);
      } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
      }
      try {
        const auto outcome =
            radwave::run_named_study(study, cfg, out_dir, grid_scale, jobs);
        std::printf("study %s\n", outcome.study.c_str());
        print_outcome(outcome);
        return outcome.pass() ? 0 : 1;
      } catch (const std::exception& e) {
        std::cerr << "study failed: " << e.what() << "\n";
        return 3;
      }
    }

    if (report->parsed()) {
      const int consumed = radwave::consolidate_report(out_dir);
      if (consumed == 0) {
        std::cerr << "no run artifacts in '" << out_dir << "'\n";
        return 2;
      }
      std::cout << "consolidated " << consumed << " artifact(s) into " << out_dir
                << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
