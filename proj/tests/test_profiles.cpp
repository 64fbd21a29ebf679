#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "radwave/profile.hpp"
#include "radwave/quadrature.hpp"

using namespace radwave;

TEST_CASE("uniform grid construction") {
  const RadialGrid g = make_grid(1.0, 5);
  REQUIRE(g.n_points == 5);
  CHECK(g.nodes[0] == doctest::Approx(0.0));
  CHECK(g.nodes[1] == doctest::Approx(0.25));
  CHECK(g.nodes[2] == doctest::Approx(0.5));
  CHECK(g.nodes[3] == doctest::Approx(0.75));
  CHECK(g.nodes[4] == doctest::Approx(1.0));

  const RadialGrid g2 = make_grid(2.0, 3);
  CHECK(g2.nodes[1] == doctest::Approx(1.0));
  CHECK(g2.nodes[2] == doctest::Approx(2.0));

  CHECK_THROWS_AS(make_grid(0.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1.0, 2), std::invalid_argument);
}

TEST_CASE("grid spacing is uniform to 1e-12 and nodes strictly increase") {
  const RadialGrid g = make_grid(7.3, 12345);
  for (int j = 1; j < g.n_points; ++j) {
    const double step = g.nodes[j] - g.nodes[j - 1];
    CHECK(step > 0.0);
    // rounding of the node values themselves bounds the achievable
    // uniformity; 1e-12 relative to the extent is far above one ulp of r_max
    CHECK(std::abs(step - g.dr) <= 1e-12 * g.r_max);
    CHECK(std::abs(g.nodes[j] - j * g.dr) <= 1e-12 * g.r_max);
  }
}

TEST_CASE("family sampling matches closed forms") {
  const RadialGrid g = make_grid(2.0, 401);
  const RadialProfile gauss = sample_profile("gaussian_bump", {1.0}, g);
  CHECK(gauss.values[0] == doctest::Approx(1.0).epsilon(1e-14));

  const RadialProfile bump = sample_profile("poly_bump", {1.0, 4.0}, g);
  CHECK(bump.value_at(1.0) == doctest::Approx(0.0));
  CHECK(bump.support_radius == doctest::Approx(1.0));

  // direct evaluation of the closed form at r = 1/2
  const RadialProfile edge = sample_profile("hardy_edge", {0.25, 1.0}, g);
  const double expected = std::pow(0.5, -0.25) * std::pow(0.75, 4);
  CHECK(edge.value_at(0.5) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.37627).epsilon(1e-4));

  CHECK_THROWS_AS(sample_profile("no_such_family", {1.0}, g),
                  std::invalid_argument);
}

TEST_CASE("descriptor-backed samples agree with the descriptor at all nodes") {
  const RadialGrid g = make_grid(3.0, 1001);
  for (const auto& p :
       {sample_profile("gaussian_bump", {2.0}, g),
        sample_profile("poly_bump", {2.5, 3.0}, g),
        sample_profile("exp_decay", {1.5}, g),
        sample_profile("ring_bump", {1.5, 0.5, 4.0}, g),
        sample_profile("hardy_edge", {0.3, 2.0}, g)}) {
    REQUIRE(p.descriptor != nullptr);
    for (int j = 0; j < g.n_points; ++j) {
      const double ref = p.descriptor->value(g.nodes[j]);
      CHECK(p.values[j] == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("descriptor derivatives agree with central differences") {
  const auto fns = {gaussian_bump(1.3), poly_bump(1.7, 5), exp_decay(0.7),
                    ring_bump(2.0, 0.8, 6), hardy_edge(0.25, 1.5, 1e-3)};
  const double h = 1e-5;
  for (const auto& f : fns) {
    for (double r : {0.31, 0.62, 0.94, 1.21}) {
      const double d_fd = (f->value(r + h) - f->value(r - h)) / (2.0 * h);
      const double s_fd =
          (f->value(r + h) - 2.0 * f->value(r) + f->value(r - h)) / (h * h);
      CHECK(f->deriv(r) == doctest::Approx(d_fd).epsilon(1e-7));
      CHECK(f->second(r) == doctest::Approx(s_fd).epsilon(1e-4));
    }
  }
}

TEST_CASE("cutoff truncation") {
  const RadialGrid g = make_grid(1.0, 101);
  RadialProfile ones = zero_profile(g);
  for (auto& v : ones.values) v = 1.0;
  ones.support_radius = std::numeric_limits<double>::infinity();

  const RadialProfile cut = cutoff_truncate(ones, 0.5);
  for (int j = 0; j < g.n_points; ++j) {
    if (g.nodes[j] < 0.5) CHECK(cut.values[j] == 1.0);
    else CHECK(cut.values[j] == 0.0);
  }
  CHECK(cut.support_radius == doctest::Approx(0.5));

  // idempotent
  const RadialProfile cut2 = cutoff_truncate(cut, 0.5);
  for (int j = 0; j < g.n_points; ++j) CHECK(cut2.values[j] == cut.values[j]);

  // zero profile stays zero
  const RadialProfile z = cutoff_truncate(zero_profile(g), 0.25);
  for (double v : z.values) CHECK(v == 0.0);

  // inactive cutoff beyond the grid leaves a compact profile untouched
  const RadialProfile bump = sample_profile("poly_bump", {0.5, 4.0}, g);
  const RadialProfile same = cutoff_truncate(bump, 5.0);
  for (int j = 0; j < g.n_points; ++j)
    CHECK(same.values[j] == doctest::Approx(bump.values[j]));

  CHECK_THROWS_AS(cutoff_truncate(ones, -1.0), std::invalid_argument);
}

TEST_CASE("simpson quadrature is 4th order and handles odd interval counts") {
  auto integrate = [](int n) {
    const RadialGrid g = make_grid(1.0, n);
    std::vector<double> f(g.n_points);
    for (int j = 0; j < g.n_points; ++j) f[j] = std::exp(g.nodes[j]);
    return simpson(f, g.dr);
  };
  const double exact = std::numbers::e - 1.0;
  CHECK(integrate(101) == doctest::Approx(exact).epsilon(1e-10));
  CHECK(integrate(102) == doctest::Approx(exact).epsilon(1e-10));
  const double err_c = std::abs(integrate(51) - exact);
  const double err_f = std::abs(integrate(101) - exact);
  CHECK(err_c / err_f > 10.0);  // ~16x for a 4th-order rule
}

TEST_CASE("gauss panels integrate polynomials exactly") {
  const double val = gauss5([](double x) { return x * x * x * x * x * x; }, 0.0, 2.0);
  CHECK(val == doctest::Approx(std::pow(2.0, 7) / 7.0).epsilon(1e-14));
  const auto cum = cumulative_gauss([](double x) { return 3.0 * x * x; }, 0.0,
                                    0.25, 8);
  CHECK(cum.back() == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(cum[4] == doctest::Approx(1.0).epsilon(1e-14));
}
