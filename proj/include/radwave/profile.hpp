#ifndef RADWAVE_PROFILE_HPP
#define RADWAVE_PROFILE_HPP

#include <string>
#include <vector>

#include "radwave/descriptor.hpp"

namespace radwave {

// Uniform radial grid 0 = r_0 < r_1 < ... < r_{n-1} = r_max. Immutable after
// construction.
struct RadialGrid {
  double r_max = 0.0;
  int n_points = 0;
  double dr = 0.0;
  std::vector<double> nodes;

  double r(int j) const { return nodes[static_cast<std::size_t>(j)]; }
  bool same_as(const RadialGrid& other) const {
    return n_points == other.n_points &&
           std::abs(r_max - other.r_max) <= 1e-12 * std::abs(r_max);
  }
  // Nearest node index to radius rho; throws if rho is not within
  // 1e-6 * dr of a node (regions and boundary radii must be node-aligned).
  int node_index(double rho) const;
};

RadialGrid make_grid(double r_max, int n_points);

// Samples of a radial function on a grid, with an optional analytic
// descriptor giving exact derivatives.
struct RadialProfile {
  RadialGrid grid;
  std::vector<double> values;
  FunctionPtr descriptor;   // may be null
  double support_radius = 0.0;  // +inf if unbounded

  // Value at an arbitrary radius: descriptor when present, otherwise 4-point
  // Lagrange interpolation of the samples.
  double value_at(double r) const;
};

enum class RegularityTag { H2xH1, H1xL2, smooth_compact };

// (position, velocity) Cauchy data; both profiles share one grid.
struct CauchyDataPair {
  RadialProfile position;
  RadialProfile velocity;
  RegularityTag tag = RegularityTag::smooth_compact;
};

CauchyDataPair make_pair(FunctionPtr phi, FunctionPtr psi, const RadialGrid& grid,
                         RegularityTag tag = RegularityTag::smooth_compact);

RadialProfile sample_profile(const FunctionPtr& family, const RadialGrid& grid);
RadialProfile sample_profile(const std::string& family,
                             const std::vector<double>& params,
                             const RadialGrid& grid);

// Values unchanged for r < r_n, zero for r >= r_n. Drops the descriptor.
RadialProfile cutoff_truncate(const RadialProfile& p, double r_n);

RadialProfile zero_profile(const RadialGrid& grid);

}  // namespace radwave

#endif
