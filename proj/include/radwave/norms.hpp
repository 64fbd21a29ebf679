#ifndef RADWAVE_NORMS_HPP
#define RADWAVE_NORMS_HPP

#include <string>

#include "radwave/profile.hpp"

namespace radwave {

// Integration region for 3-d radial norms, radii in grid units. Region
// boundaries must land on grid nodes.
struct RegionSpec {
  enum class Kind { all_space, ball, annulus, exterior };
  Kind kind = Kind::all_space;
  double rho1 = 0.0;
  double rho2 = 0.0;

  static RegionSpec all_space() { return {}; }
  static RegionSpec ball(double rho);
  static RegionSpec annulus(double rho1, double rho2);
  static RegionSpec exterior(double rho);
  std::string label() const;
};

struct NormReport {
  double l2 = 0.0;
  double h1_semi = 0.0;
  double h2_semi = 0.0;
  RegionSpec region;

  double h1_full() const;
  double h2_full() const;
};

// 3-d radial Sobolev integrals over the region, by composite Simpson:
//   l2^2      = 4 pi int f^2 r^2 dr
//   h1_semi^2 = 4 pi int f'^2 r^2 dr
//   h2_semi^2 = 4 pi int (f''^2 r^2 + 2 f'^2) dr
// Derivatives come from the descriptor when present, otherwise from 4th-order
// finite differences of the samples.
NormReport norms(const RadialProfile& p, const RegionSpec& region);

// || p/|x| ||_{L2(R^3)} / || grad P ||_{L2(R^3)}. Throws on the zero profile.
double hardy_ratio(const RadialProfile& p);

// Hardy ratio restricted to the unit ball with the full H^1 norm in the
// denominator: ||p/|x|||_{L2(B_1)} / ||P||_{H1(B_1)} (reported, not asserted).
double hardy_ball_ratio(const RadialProfile& p);

enum class SobolevOrder { L2, H1, H2 };

// Distance between data pairs: position at `order`, velocity one order lower
// (floored at L2), combined as the sum of the two full norms.
double pair_distance(const CauchyDataPair& a, const CauchyDataPair& b,
                     SobolevOrder order);

// Sum of the full norms of a pair at `order` (position) and one order lower
// (velocity); the quantity the trace bound normalizes by.
double pair_norm(const CauchyDataPair& a, SobolevOrder order);

}  // namespace radwave

#endif
