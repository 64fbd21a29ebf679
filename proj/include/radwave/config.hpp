#ifndef RADWAVE_CONFIG_HPP
#define RADWAVE_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "radwave/harness.hpp"

namespace radwave {

// Flat `section.key = value` configuration. Unknown keys are rejected; the
// data.* family keys are required, everything else falls back to the shipped
// defaults.
class StudyConfig {
 public:
  static StudyConfig defaults();
  static StudyConfig load(const std::string& path);
  // Parses config text (used by load and by tests).
  static StudyConfig parse(const std::string& text);

  std::string get(const std::string& key) const;
  double get_real(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::vector<double> get_reals(const std::string& key) const;

  // Spec for the shared desk-scale studies; residual studies override the
  // grid density and CFL ratio from the residual.* keys.
  StudySpec study_spec(BoundaryKind bc) const;
  StudySpec residual_spec() const;

  // Writes the canonical key = value rendering (all keys, sorted).
  std::string render() const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace radwave

#endif
