#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "radwave/mollify.hpp"
#include "radwave/profile.hpp"
#include "radwave/quadrature.hpp"

using namespace radwave;

namespace {

// Independent oracle: full 3-d convolution of P(x) = p(|x|) with the
// mollifier, reduced to a 2-d (s, theta) spherical quadrature
//   (P * eta_delta)(r) = 2 pi int_0^inf int_0^pi s^2 p(s)
//                        eta_delta(sqrt(r^2 + s^2 - 2 r s cos theta))
//                        sin theta  dtheta ds.
double convolution_oracle(const RadialFunction& p, double p_support, double r,
                          double delta) {
  const double d3 = delta * delta * delta;
  const double lo = std::max(0.0, r - delta);
  const double hi = std::min(r + delta, p_support);
  if (hi <= lo) return 0.0;
  const int ns = 800, nt = 400;
  std::vector<double> outer(ns + 1), inner(nt + 1);
  const double hs = (hi - lo) / ns;
  for (int i = 0; i <= ns; ++i) {
    const double s = lo + i * hs;
    double theta_max = std::numbers::pi;
    if (r > 0.0 && s > 0.0) {
      const double cmin = (r * r + s * s - delta * delta) / (2.0 * r * s);
      theta_max = std::acos(std::clamp(cmin, -1.0, 1.0));
    }
    if (theta_max <= 0.0) { outer[i] = 0.0; continue; }
    const double ht = theta_max / nt;
    for (int k = 0; k <= nt; ++k) {
      const double th = k * ht;
      const double dist =
          std::sqrt(std::max(0.0, r * r + s * s - 2.0 * r * s * std::cos(th)));
      inner[k] = mollifier_bump(dist / delta) / d3 * std::sin(th);
    }
    outer[i] = s * s * p.value(s) * simpson(inner, ht);
  }
  return 2.0 * std::numbers::pi * simpson(outer, hs);
}

}  // namespace

TEST_CASE("mollifier bump has unit 3-d mass") {
  const int n = 2001;
  std::vector<double> w(n);
  const double h = 1.0 / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double tau = i * h;
    w[i] = tau * tau * mollifier_bump(tau);
  }
  CHECK(4.0 * std::numbers::pi * simpson(w, h) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mollifier_bump(1.0) == 0.0);
  CHECK(mollifier_bump(1.5) == 0.0);
}

TEST_CASE("mollifying the zero profile returns zero") {
  const RadialGrid g = make_grid(2.0, 501);
  const RadialProfile out = radial_mollify(zero_profile(g), 0.1);
  for (double v : out.values) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("mollifier has unit mass: constant profile stays constant inside") {
  const RadialGrid g = make_grid(2.0, 1001);
  RadialProfile ones = zero_profile(g);
  for (auto& v : ones.values) v = 1.0;
  ones.support_radius = std::numeric_limits<double>::infinity();
  const RadialProfile out = radial_mollify(ones, 0.1);
  for (int j = 0; j < g.n_points; ++j) {
    const double r = g.nodes[j];
    if (r > 0.15 && r < 1.8) CHECK(out.values[j] == doctest::Approx(1.0).epsilon(1e-8));
  }
  CHECK(out.values[0] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("radial reduction matches the full 3-d convolution oracle") {
  const RadialGrid g = make_grid(2.0, 2001);
  const RadialProfile p = sample_profile("poly_bump", {1.0, 4.0}, g);
  const double delta = 0.05;
  const RadialProfile out = radial_mollify(p, delta);
  for (double r : {0.0, 0.1, 0.5, 0.9, 0.98, 1.02}) {
    const double oracle = convolution_oracle(*p.descriptor, 1.0, r, delta);
    const int j = g.node_index(r);
    if (std::abs(oracle) > 1e-10) {
      CHECK(out.values[j] == doctest::Approx(oracle).epsilon(1e-6));
    } else {
      CHECK(std::abs(out.values[j] - oracle) < 1e-10);
    }
  }
  CHECK(out.support_radius == doctest::Approx(1.0 + delta));
}

TEST_CASE("mollification preserves total 3-d mass") {
  const RadialGrid g = make_grid(2.0, 2001);
  const RadialProfile p = sample_profile("poly_bump", {1.0, 4.0}, g);
  const RadialProfile out = radial_mollify(p, 0.08);
  std::vector<double> w(g.n_points);
  for (int j = 0; j < g.n_points; ++j)
    w[j] = g.nodes[j] * g.nodes[j] * p.values[j];
  const double mass_in = simpson(w, g.dr);
  for (int j = 0; j < g.n_points; ++j)
    w[j] = g.nodes[j] * g.nodes[j] * out.values[j];
  const double mass_out = simpson(w, g.dr);
  CHECK(mass_out == doctest::Approx(mass_in).epsilon(1e-7));
}

TEST_CASE("mollification is linear") {
  const RadialGrid g = make_grid(2.0, 801);
  const RadialProfile p = sample_profile("poly_bump", {1.0, 4.0}, g);
  const RadialProfile q = sample_profile("gaussian_bump", {3.0}, g);
  const double a = 0.7, b = -1.3;

  RadialProfile combo = zero_profile(g);
  combo.descriptor = linear_combination(a, p.descriptor, b, q.descriptor);
  for (int j = 0; j < g.n_points; ++j)
    combo.values[j] = a * p.values[j] + b * q.values[j];
  combo.support_radius = std::numeric_limits<double>::infinity();

  const RadialProfile mp = radial_mollify(p, 0.1);
  const RadialProfile mq = radial_mollify(q, 0.1);
  const RadialProfile mc = radial_mollify(combo, 0.1);
  double scale = 0.0;
  for (int j = 0; j < g.n_points; ++j)
    scale = std::max(scale, std::abs(mc.values[j]));
  for (int j = 0; j < g.n_points; ++j) {
    const double lin = a * mp.values[j] + b * mq.values[j];
    CHECK(std::abs(mc.values[j] - lin) <= 1e-12 * scale);
  }
}

TEST_CASE("mollify argument checks") {
  const RadialGrid g = make_grid(2.0, 101);
  const RadialProfile p = sample_profile("poly_bump", {1.0, 2.0}, g);
  CHECK_THROWS_AS(radial_mollify(p, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_mollify(p, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(radial_mollify(p, 0.9), std::invalid_argument);
}

TEST_CASE("truncate-then-mollify pipeline yields a smooth compact profile") {
  const RadialGrid g = make_grid(4.0, 2001);
  const RadialProfile base = sample_profile("gaussian_bump", {1.0}, g);
  const RadialProfile cut = cutoff_truncate(base, 2.5);
  const RadialProfile smooth = radial_mollify(cut, 0.125);
  CHECK(smooth.support_radius == doctest::Approx(2.625));
  for (int j = 0; j < g.n_points; ++j)
    if (g.nodes[j] >= 2.7) CHECK(std::abs(smooth.values[j]) < 1e-14);
  // smoothing keeps interior values close to the original
  CHECK(smooth.value_at(1.0) == doctest::Approx(base.value_at(1.0)).epsilon(1e-2));
}
