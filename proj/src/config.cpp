#include "radwave/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace radwave {

namespace {

const std::map<std::string, std::string>& default_entries() {
  static const std::map<std::string, std::string> defaults = {
      {"data.position_family", "gaussian_bump"},
      {"data.position_params", "1.0"},
      {"data.velocity_family", "gaussian_bump"},
      {"data.velocity_params", "2.0"},
      {"data.regularity", "smooth_compact"},
      {"ladder.eps", "0.25,0.125,0.0625,0.03125,0.015625,0.0078125"},
      {"solver.c", "1.0"},
      {"solver.T", "1.0"},
      {"solver.cfl", "0.5"},
      {"grid.cells_per_eps", "16"},
      {"grid.margin", "0.25"},
      {"snapshots.max", "512"},
      {"energy.eps", "0.25"},
      {"energy.n_cells", "16384"},
      {"residual.cells_per_eps", "128"},
      {"residual.cfl", "1.0"},
      {"test_fn.radius", "2.0"},
      {"test_fn.poly_k", "4"},
      {"test_fn.time_power", "4"},
      {"run.seed", "20240901"},
  };
  return defaults;
}

const std::set<std::string>& required_keys() {
  static const std::set<std::string> req = {
      "data.position_family", "data.position_params",
      "data.velocity_family", "data.velocity_params"};
  return req;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

StudyConfig StudyConfig::defaults() {
  StudyConfig c;
  c.values_ = default_entries();
  return c;
}

StudyConfig StudyConfig::parse(const std::string& text) {
  std::map<std::string, std::string> parsed;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!default_entries().count(key))
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    if (parsed.count(key))
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": duplicate key '" + key + "'");
    parsed[key] = value;
  }
  for (const auto& key : required_keys())
    if (!parsed.count(key))
      throw std::invalid_argument("config: missing required key '" + key + "'");
  StudyConfig c;
  c.values_ = default_entries();
  for (const auto& [k, v] : parsed) c.values_[k] = v;
  return c;
}

StudyConfig StudyConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string StudyConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end())
    throw std::invalid_argument("config: unknown key '" + key + "'");
  return it->second;
}

double StudyConfig::get_real(const std::string& key) const {
  const std::string v = get(key);
  std::size_t pos = 0;
  const double x = std::stod(v, &pos);
  if (pos != v.size())
    throw std::invalid_argument("config: key '" + key + "' is not a real");
  return x;
}

int StudyConfig::get_int(const std::string& key) const {
  const std::string v = get(key);
  std::size_t pos = 0;
  const int x = std::stoi(v, &pos);
  if (pos != v.size())
    throw std::invalid_argument("config: key '" + key + "' is not an integer");
  return x;
}

std::vector<double> StudyConfig::get_reals(const std::string& key) const {
  const std::string v = get(key);
  std::vector<double> out;
  std::istringstream in(v);
  std::string part;
  while (std::getline(in, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    out.push_back(std::stod(part));
  }
  if (out.empty())
    throw std::invalid_argument("config: key '" + key + "' has no values");
  return out;
}

StudySpec StudyConfig::study_spec(BoundaryKind bc) const {
  StudySpec spec;
  // half-cell origin regularization for families unbounded at r = 0
  const std::vector<double> ladder = get_reals("ladder.eps");
  const double half_cell = 0.5 * ladder.back() / get_int("grid.cells_per_eps");
  spec.phi = make_family(get("data.position_family"),
                         get_reals("data.position_params"), half_cell);
  spec.psi = make_family(get("data.velocity_family"),
                         get_reals("data.velocity_params"), half_cell);
  const std::string reg = get("data.regularity");
  if (reg == "smooth_compact") spec.tag = RegularityTag::smooth_compact;
  else if (reg == "H2xH1") spec.tag = RegularityTag::H2xH1;
  else if (reg == "H1xL2") spec.tag = RegularityTag::H1xL2;
  else throw std::invalid_argument("config: bad data.regularity '" + reg + "'");
  spec.eps_ladder = get_reals("ladder.eps");
  spec.bc = bc;
  spec.c = get_real("solver.c");
  spec.T = get_real("solver.T");
  spec.cfl = get_real("solver.cfl");
  spec.cells_per_eps = get_int("grid.cells_per_eps");
  spec.margin = get_real("grid.margin");
  spec.max_snapshots = get_int("snapshots.max");
  spec.test_radius = get_real("test_fn.radius");
  spec.test_poly_k = get_int("test_fn.poly_k");
  spec.time_power = get_int("test_fn.time_power");
  return spec;
}

StudySpec StudyConfig::residual_spec() const {
  StudySpec spec = study_spec(BoundaryKind::dirichlet_for_u);
  spec.cells_per_eps = get_int("residual.cells_per_eps");
  spec.cfl = get_real("residual.cfl");
  return spec;
}

std::string StudyConfig::render() const {
  std::ostringstream out;
  for (const auto& [k, v] : values_) out << k << " = " << v << "\n";
  return out.str();
}

}  // namespace radwave
