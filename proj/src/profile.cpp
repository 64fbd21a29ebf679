#include "radwave/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace radwave {

int RadialGrid::node_index(double rho) const {
  const int j = static_cast<int>(std::lround(rho / dr));
  if (j < 0 || j >= n_points || std::abs(nodes[j] - rho) > 1e-6 * dr)
    throw std::invalid_argument("radius is not aligned with a grid node");
  return j;
}

RadialGrid make_grid(double r_max, int n_points) {
  if (r_max <= 0.0) throw std::invalid_argument("make_grid: r_max must be positive");
  if (n_points < 3) throw std::invalid_argument("make_grid: need at least 3 points");
  RadialGrid g;
  g.r_max = r_max;
  g.n_points = n_points;
  g.dr = r_max / (n_points - 1);
  g.nodes.resize(n_points);
  for (int j = 0; j < n_points; ++j) g.nodes[j] = j * g.dr;
  g.nodes.back() = r_max;
  return g;
}

double RadialProfile::value_at(double r) const {
  if (descriptor) return descriptor->value(r);
  const int n = grid.n_points;
  if (r <= 0.0) return values[0];
  if (r >= grid.r_max) return values[n - 1];
  int j = static_cast<int>(r / grid.dr);
  j = std::clamp(j - 1, 0, n - 4);  // stencil nodes j..j+3
  const double x = (r - grid.nodes[j]) / grid.dr;
  // 4-point Lagrange weights at offsets 0,1,2,3
  const double w0 = -(x - 1.0) * (x - 2.0) * (x - 3.0) / 6.0;
  const double w1 = x * (x - 2.0) * (x - 3.0) / 2.0;
  const double w2 = -x * (x - 1.0) * (x - 3.0) / 2.0;
  const double w3 = x * (x - 1.0) * (x - 2.0) / 6.0;
  return w0 * values[j] + w1 * values[j + 1] + w2 * values[j + 2] +
         w3 * values[j + 3];
}

RadialProfile sample_profile(const FunctionPtr& family, const RadialGrid& grid) {
  if (!family) throw std::invalid_argument("sample_profile: null descriptor");
  RadialProfile p;
  p.grid = grid;
  p.descriptor = family;
  p.support_radius = family->support_radius();
  p.values.resize(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) {
    const double v = family->value(grid.nodes[j]);
    if (!std::isfinite(v)) throw std::invalid_argument("sample_profile: non-finite sample");
    p.values[j] = v;
  }
  return p;
}

RadialProfile sample_profile(const std::string& family,
                             const std::vector<double>& params,
                             const RadialGrid& grid) {
  return sample_profile(make_family(family, params, 0.5 * grid.dr), grid);
}

CauchyDataPair make_pair(FunctionPtr phi, FunctionPtr psi, const RadialGrid& grid,
                         RegularityTag tag) {
  CauchyDataPair d;
  d.position = sample_profile(phi, grid);
  d.velocity = sample_profile(psi, grid);
  d.tag = tag;
  return d;
}

RadialProfile cutoff_truncate(const RadialProfile& p, double r_n) {
  if (r_n <= 0.0) throw std::invalid_argument("cutoff_truncate: r_n must be positive");
  RadialProfile out;
  out.grid = p.grid;
  out.values = p.values;
  out.descriptor = nullptr;
  for (int j = 0; j < p.grid.n_points; ++j)
    if (p.grid.nodes[j] >= r_n) out.values[j] = 0.0;
  out.support_radius = std::min(p.support_radius, r_n);
  return out;
}

RadialProfile zero_profile(const RadialGrid& grid) {
  RadialProfile p;
  p.grid = grid;
  p.values.assign(grid.n_points, 0.0);
  p.descriptor = nullptr;
  p.support_radius = 0.0;
  return p;
}

}  // namespace radwave
