#include "radwave/norms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "radwave/fd.hpp"
#include "radwave/quadrature.hpp"

namespace radwave {

RegionSpec RegionSpec::ball(double rho) {
  if (rho < 0.0) throw std::invalid_argument("region: negative radius");
  RegionSpec s;
  s.kind = Kind::ball;
  s.rho2 = rho;
  return s;
}

RegionSpec RegionSpec::annulus(double rho1, double rho2) {
  if (rho1 < 0.0 || rho2 <= rho1)
    throw std::invalid_argument("region: need 0 <= rho1 < rho2");
  RegionSpec s;
  s.kind = Kind::annulus;
  s.rho1 = rho1;
  s.rho2 = rho2;
  return s;
}

RegionSpec RegionSpec::exterior(double rho) {
  if (rho < 0.0) throw std::invalid_argument("region: negative radius");
  RegionSpec s;
  s.kind = Kind::exterior;
  s.rho1 = rho;
  return s;
}

std::string RegionSpec::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::all_space: os << "all_space"; break;
    case Kind::ball: os << "ball(" << rho2 << ")"; break;
    case Kind::annulus: os << "annulus(" << rho1 << "," << rho2 << ")"; break;
    case Kind::exterior: os << "exterior(" << rho1 << ")"; break;
  }
  return os.str();
}

double NormReport::h1_full() const { return std::sqrt(l2 * l2 + h1_semi * h1_semi); }
double NormReport::h2_full() const {
  return std::sqrt(l2 * l2 + h1_semi * h1_semi + h2_semi * h2_semi);
}

namespace {

struct NodeRange {
  std::size_t lo, hi;
};

NodeRange region_range(const RadialGrid& g, const RegionSpec& region) {
  std::size_t lo = 0, hi = static_cast<std::size_t>(g.n_points - 1);
  switch (region.kind) {
    case RegionSpec::Kind::all_space:
      break;
    case RegionSpec::Kind::ball:
      if (region.rho2 > g.r_max * (1.0 + 1e-12))
        throw std::invalid_argument("region exceeds grid extent");
      hi = static_cast<std::size_t>(g.node_index(region.rho2));
      break;
    case RegionSpec::Kind::annulus:
      if (region.rho2 > g.r_max * (1.0 + 1e-12))
        throw std::invalid_argument("region exceeds grid extent");
      lo = static_cast<std::size_t>(g.node_index(region.rho1));
      hi = static_cast<std::size_t>(g.node_index(region.rho2));
      break;
    case RegionSpec::Kind::exterior:
      if (region.rho1 > g.r_max * (1.0 + 1e-12))
        throw std::invalid_argument("region exceeds grid extent");
      lo = static_cast<std::size_t>(g.node_index(region.rho1));
      break;
  }
  return {lo, hi};
}

struct Derivatives {
  std::vector<double> d1, d2;
};

Derivatives profile_derivatives(const RadialProfile& p) {
  Derivatives d;
  const int n = p.grid.n_points;
  d.d1.resize(n);
  d.d2.resize(n);
  if (p.descriptor) {
    for (int j = 0; j < n; ++j) {
      d.d1[j] = p.descriptor->deriv(p.grid.nodes[j]);
      d.d2[j] = p.descriptor->second(p.grid.nodes[j]);
    }
  } else {
    d.d1 = deriv1_fd4(p.values, p.grid.dr);
    d.d2 = deriv2_fd4(p.values, p.grid.dr);
  }
  return d;
}

}  // namespace

NormReport norms(const RadialProfile& p, const RegionSpec& region) {
  const auto [lo, hi] = region_range(p.grid, region);
  const Derivatives der = profile_derivatives(p);
  const int n = p.grid.n_points;
  const double fourpi = 4.0 * std::numbers::pi;

  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) {
    const double r = p.grid.nodes[j];
    w[j] = p.values[j] * p.values[j] * r * r;
  }
  const double l2sq = fourpi * simpson_range(w, p.grid.dr, lo, hi);

  for (int j = 0; j < n; ++j) {
    const double r = p.grid.nodes[j];
    w[j] = der.d1[j] * der.d1[j] * r * r;
  }
  const double h1sq = fourpi * simpson_range(w, p.grid.dr, lo, hi);

  // the 1/r^2 term cancels against the r^2 measure: integrand is
  // f''^2 r^2 + 2 f'^2, finite everywhere
  for (int j = 0; j < n; ++j) {
    const double r = p.grid.nodes[j];
    w[j] = der.d2[j] * der.d2[j] * r * r + 2.0 * der.d1[j] * der.d1[j];
  }
  const double h2sq = fourpi * simpson_range(w, p.grid.dr, lo, hi);

  NormReport rep;
  rep.l2 = std::sqrt(std::max(0.0, l2sq));
  rep.h1_semi = std::sqrt(std::max(0.0, h1sq));
  rep.h2_semi = std::sqrt(std::max(0.0, h2sq));
  rep.region = region;
  return rep;
}

double hardy_ratio(const RadialProfile& p) {
  const Derivatives der = profile_derivatives(p);
  const int n = p.grid.n_points;
  const double fourpi = 4.0 * std::numbers::pi;
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = p.values[j] * p.values[j];
  const double num_sq = fourpi * simpson(w, p.grid.dr);
  for (int j = 0; j < n; ++j) {
    const double r = p.grid.nodes[j];
    w[j] = der.d1[j] * der.d1[j] * r * r;
  }
  const double den_sq = fourpi * simpson(w, p.grid.dr);
  if (den_sq <= 0.0 || num_sq <= 0.0)
    throw std::invalid_argument("hardy_ratio: undefined for the zero profile");
  return std::sqrt(num_sq / den_sq);
}

double hardy_ball_ratio(const RadialProfile& p) {
  if (p.grid.r_max < 1.0)
    throw std::invalid_argument("hardy_ball_ratio: grid must contain the unit ball");
  const auto region = RegionSpec::ball(1.0);
  const auto [lo, hi] = region_range(p.grid, region);
  const Derivatives der = profile_derivatives(p);
  const int n = p.grid.n_points;
  const double fourpi = 4.0 * std::numbers::pi;
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = p.values[j] * p.values[j];
  const double num_sq = fourpi * simpson_range(w, p.grid.dr, lo, hi);
  const NormReport nr = norms(p, region);
  const double den_sq = nr.l2 * nr.l2 + nr.h1_semi * nr.h1_semi;
  if (den_sq <= 0.0 || num_sq <= 0.0)
    throw std::invalid_argument("hardy_ball_ratio: undefined for the zero profile");
  return std::sqrt(num_sq / den_sq);
}

namespace {

RadialProfile difference_profile(const RadialProfile& a, const RadialProfile& b) {
  if (!a.grid.same_as(b.grid))
    throw std::invalid_argument("pair_distance: profiles on different grids");
  RadialProfile d;
  d.grid = a.grid;
  d.values.resize(a.values.size());
  for (std::size_t j = 0; j < a.values.size(); ++j)
    d.values[j] = a.values[j] - b.values[j];
  if (a.descriptor && b.descriptor)
    d.descriptor = linear_combination(1.0, a.descriptor, -1.0, b.descriptor);
  d.support_radius = std::max(a.support_radius, b.support_radius);
  return d;
}

double norm_at(const RadialProfile& p, SobolevOrder order) {
  const NormReport r = norms(p, RegionSpec::all_space());
  switch (order) {
    case SobolevOrder::L2: return r.l2;
    case SobolevOrder::H1: return r.h1_full();
    case SobolevOrder::H2: return r.h2_full();
  }
  return 0.0;
}

SobolevOrder lower(SobolevOrder order) {
  switch (order) {
    case SobolevOrder::H2: return SobolevOrder::H1;
    case SobolevOrder::H1: return SobolevOrder::L2;
    case SobolevOrder::L2: return SobolevOrder::L2;
  }
  return SobolevOrder::L2;
}

}  // namespace

double pair_distance(const CauchyDataPair& a, const CauchyDataPair& b,
                     SobolevOrder order) {
  const RadialProfile dp = difference_profile(a.position, b.position);
  const RadialProfile dv = difference_profile(a.velocity, b.velocity);
  return norm_at(dp, order) + norm_at(dv, lower(order));
}

double pair_norm(const CauchyDataPair& a, SobolevOrder order) {
  return norm_at(a.position, order) + norm_at(a.velocity, lower(order));
}

}  // namespace radwave
