#ifndef RADWAVE_STUDIES_HPP
#define RADWAVE_STUDIES_HPP

#include <string>
#include <vector>

#include "radwave/config.hpp"

namespace radwave {

struct CriterionResult {
  std::string name;
  double measured = 0.0;
  std::string window;  // human-readable acceptance window
  bool pass = false;
};

struct StudyOutcome {
  std::string study;
  std::vector<CriterionResult> criteria;
  double wall_seconds = 0.0;
  bool pass() const;
};

// The named studies the command line exposes.
const std::vector<std::string>& study_names();

// Runs one study, writes its CSV artifacts and summary into out_dir, and
// returns the evaluated acceptance criteria. grid_scale multiplies the grid
// resolution (refinement checks); jobs bounds ladder parallelism.
StudyOutcome run_named_study(const std::string& name, const StudyConfig& cfg,
                             const std::string& out_dir, int grid_scale,
                             int jobs);

// Structural validation behind `validate`: config consistency, warp function
// properties, grid resolution of the ladder, and randomized norm properties.
// Returns human-readable violations; empty means pass.
std::vector<std::string> validate_setup(const StudyConfig& cfg);

// Consolidates run artifacts in out_dir into gnuplot-style .dat files (one
// per quantity, natural-log pairs) and a report.txt. Returns the number of
// artifacts consumed; zero means the directory had none.
int consolidate_report(const std::string& out_dir);

}  // namespace radwave

#endif
