#include "radwave/mollify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "radwave/quadrature.hpp"

namespace radwave {

namespace {

double raw_bump(double tau) {
  const double t2 = tau * tau;
  if (t2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t2));
}

constexpr int kTableCells = 4096;

struct BumpTables {
  double norm;                 // A
  std::vector<double> mass;    // M[j] = int_0^{j*h} u bump(u) du (normalized)
  double h;

  BumpTables() {
    h = 1.0 / kTableCells;
    const double m3 =
        4.0 * std::numbers::pi *
        cumulative_gauss([](double u) { return u * u * raw_bump(u); }, 0.0, h,
                         kTableCells)
            .back();
    norm = 1.0 / m3;
    mass = cumulative_gauss([this](double u) { return norm * u * raw_bump(u); },
                            0.0, h, kTableCells);
  }

  // M(tau) for tau in [0, 1] by 4-point Lagrange interpolation.
  double mass_at(double tau) const {
    if (tau <= 0.0) return 0.0;
    if (tau >= 1.0) return mass.back();
    int j = static_cast<int>(tau / h);
    if (j > kTableCells - 3) j = kTableCells - 3;
    if (j > 0) --j;
    const double x = (tau - j * h) / h;
    const double w0 = -(x - 1.0) * (x - 2.0) * (x - 3.0) / 6.0;
    const double w1 = x * (x - 2.0) * (x - 3.0) / 2.0;
    const double w2 = -x * (x - 1.0) * (x - 3.0) / 2.0;
    const double w3 = x * (x - 1.0) * (x - 2.0) / 6.0;
    return w0 * mass[j] + w1 * mass[j + 1] + w2 * mass[j + 2] + w3 * mass[j + 3];
  }
};

const BumpTables& tables() {
  static const BumpTables t;
  return t;
}

}  // namespace

double mollifier_bump(double tau) { return tables().norm * raw_bump(tau); }

RadialProfile radial_mollify(const RadialProfile& p, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("radial_mollify: delta must be positive");
  if (delta >= p.grid.r_max / 4.0)
    throw std::invalid_argument("radial_mollify: delta too large for the grid");

  const BumpTables& tb = tables();
  const RadialGrid& g = p.grid;
  const double s_max = std::min(p.support_radius, static_cast<double>(g.r_max));

  // Inner mass integral int_{|r-s|}^{r+s} tau eta_delta(tau) dtau, which is
  // (1/delta) [M(min(r+s,delta)/delta) - M(min(|r-s|,delta)/delta)].
  auto shell_mass = [&](double r, double s) {
    const double hi = std::min(r + s, delta) / delta;
    const double lo = std::min(std::abs(r - s), delta) / delta;
    if (lo >= 1.0) return 0.0;
    return (tb.mass_at(hi) - tb.mass_at(lo)) / delta;
  };

  constexpr int kPanels = 512;  // cells across the 2*delta window
  std::vector<double> integrand(kPanels + 1);

  RadialProfile out;
  out.grid = g;
  out.descriptor = nullptr;
  out.support_radius = std::isfinite(p.support_radius)
                           ? p.support_radius + delta
                           : p.support_radius;
  out.values.resize(g.n_points);

  const double d3 = delta * delta * delta;
  for (int j = 0; j < g.n_points; ++j) {
    const double r = g.nodes[j];
    const double lo = std::max(0.0, r - delta);
    const double hi = std::min(r + delta, s_max);
    if (hi <= lo) { out.values[j] = 0.0; continue; }
    const double hs = (hi - lo) / kPanels;
    if (r < 1e-9) {
      for (int i = 0; i <= kPanels; ++i) {
        const double s = lo + i * hs;
        integrand[i] = s * s * p.value_at(s) * mollifier_bump(s / delta) / d3;
      }
      out.values[j] = 4.0 * std::numbers::pi * simpson(integrand, hs);
    } else {
      for (int i = 0; i <= kPanels; ++i) {
        const double s = lo + i * hs;
        integrand[i] = s * p.value_at(s) * shell_mass(r, s);
      }
      out.values[j] = 2.0 * std::numbers::pi / r * simpson(integrand, hs);
    }
  }
  return out;
}

}  // namespace radwave
