#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radwave/boundary_data.hpp"
#include "radwave/norms.hpp"

using namespace radwave;

TEST_CASE("zero profile has zero norms") {
  const RadialGrid g = make_grid(4.0, 1001);
  const NormReport r = norms(zero_profile(g), RegionSpec::all_space());
  CHECK(r.l2 == 0.0);
  CHECK(r.h1_semi == 0.0);
  CHECK(r.h2_semi == 0.0);
}

TEST_CASE("gaussian L2 norm matches the closed-form moment") {
  // 4 pi int r^2 e^{-2 r^2} dr = pi^{3/2} / (2 sqrt 2)
  const RadialGrid g = make_grid(16.0, 32001);
  const NormReport r = norms(sample_profile("gaussian_bump", {1.0}, g),
                             RegionSpec::all_space());
  const double exact = std::pow(std::numbers::pi, 0.75) / std::pow(2.0, 0.75);
  CHECK(r.l2 == doctest::Approx(exact).epsilon(1e-10));
  CHECK(exact == doctest::Approx(1.40311).epsilon(1e-5));
}

TEST_CASE("exponential H1 seminorm matches the closed-form moment") {
  // 4 pi int e^{-2r} r^2 dr = pi, so h1_semi = sqrt(pi)
  const RadialGrid g = make_grid(64.0, 64001);
  const NormReport r =
      norms(sample_profile("exp_decay", {1.0}, g), RegionSpec::all_space());
  CHECK(r.h1_semi == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-9));
  CHECK(std::sqrt(std::numbers::pi) == doctest::Approx(1.77245).epsilon(1e-5));
}

TEST_CASE("hardy ratio of exp_decay(1) is sqrt(2)") {
  const RadialGrid g = make_grid(64.0, 64001);
  const double ratio = hardy_ratio(sample_profile("exp_decay", {1.0}, g));
  CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("hardy ratio stays below the sharp 3-d constant") {
  const RadialGrid gg = make_grid(16.0, 32001);
  CHECK(hardy_ratio(sample_profile("gaussian_bump", {1.0}, gg)) < 2.0 + 1e-3);
  const RadialGrid gb = make_grid(2.0, 32001);
  CHECK(hardy_ratio(sample_profile("poly_bump", {1.0, 4.0}, gb)) < 2.0 + 1e-3);
  CHECK(hardy_ratio(sample_profile("hardy_edge", {0.25, 1.0}, gb)) < 2.0 + 1e-3);
}

TEST_CASE("hardy ratio is scale invariant and rejects the zero profile") {
  const RadialGrid g = make_grid(16.0, 8001);
  const RadialProfile p = sample_profile("gaussian_bump", {1.5}, g);
  RadialProfile scaled = p;
  scaled.descriptor = linear_combination(5.0, p.descriptor, 0.0, p.descriptor);
  for (auto& v : scaled.values) v *= 5.0;
  CHECK(hardy_ratio(scaled) == doctest::Approx(hardy_ratio(p)).epsilon(1e-12));
  CHECK_THROWS_AS(hardy_ratio(zero_profile(g)), std::invalid_argument);
}

TEST_CASE("region handling: additivity and argument checks") {
  const RadialGrid g = make_grid(8.0, 4097);
  const RadialProfile p = sample_profile("gaussian_bump", {1.0}, g);
  const NormReport whole = norms(p, RegionSpec::all_space());
  const NormReport inner = norms(p, RegionSpec::ball(2.0));
  const NormReport outer = norms(p, RegionSpec::exterior(2.0));

  CHECK(inner.l2 * inner.l2 + outer.l2 * outer.l2 ==
        doctest::Approx(whole.l2 * whole.l2).epsilon(1e-10));
  CHECK(inner.h1_semi * inner.h1_semi + outer.h1_semi * outer.h1_semi ==
        doctest::Approx(whole.h1_semi * whole.h1_semi).epsilon(1e-10));
  CHECK(inner.h2_semi * inner.h2_semi + outer.h2_semi * outer.h2_semi ==
        doctest::Approx(whole.h2_semi * whole.h2_semi).epsilon(1e-10));

  const NormReport ring = norms(p, RegionSpec::annulus(1.0, 2.0));
  const NormReport b1 = norms(p, RegionSpec::ball(1.0));
  const NormReport b2 = norms(p, RegionSpec::ball(2.0));
  CHECK(b1.l2 * b1.l2 + ring.l2 * ring.l2 ==
        doctest::Approx(b2.l2 * b2.l2).epsilon(1e-10));

  CHECK_THROWS_AS(norms(p, RegionSpec::ball(9.0)), std::invalid_argument);
  CHECK_THROWS_AS(RegionSpec::annulus(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RegionSpec::ball(-1.0), std::invalid_argument);
}

TEST_CASE("norms satisfy triangle inequality and absolute homogeneity") {
  const RadialGrid g = make_grid(8.0, 2001);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> amp(-2.0, 2.0), width(0.5, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    const FunctionPtr fa =
        linear_combination(amp(rng), gaussian_bump(width(rng)), amp(rng),
                           gaussian_bump(width(rng)));
    const FunctionPtr fb =
        linear_combination(amp(rng), gaussian_bump(width(rng)), amp(rng),
                           gaussian_bump(width(rng)));
    const RadialProfile a = sample_profile(fa, g);
    const RadialProfile b = sample_profile(fb, g);
    RadialProfile sum = sample_profile(linear_combination(1.0, fa, 1.0, fb), g);

    const NormReport na = norms(a, RegionSpec::all_space());
    const NormReport nb = norms(b, RegionSpec::all_space());
    const NormReport ns = norms(sum, RegionSpec::all_space());
    CHECK(ns.l2 <= na.l2 + nb.l2 + 1e-10 * (na.l2 + nb.l2));
    CHECK(ns.h1_semi <= na.h1_semi + nb.h1_semi + 1e-10 * (na.h1_semi + nb.h1_semi));
    CHECK(ns.h2_semi <= na.h2_semi + nb.h2_semi + 1e-10 * (na.h2_semi + nb.h2_semi));

    const double lam = amp(rng);
    RadialProfile scaled = sample_profile(
        linear_combination(lam, fa, 0.0, fb), g);
    const NormReport nl = norms(scaled, RegionSpec::all_space());
    CHECK(nl.l2 == doctest::Approx(std::abs(lam) * na.l2).epsilon(1e-10));
    CHECK(nl.h1_semi == doctest::Approx(std::abs(lam) * na.h1_semi).epsilon(1e-10));
  }
}

TEST_CASE("cutoff truncation contracts the L2 norm") {
  const RadialGrid g = make_grid(8.0, 2001);
  const RadialProfile p = sample_profile("gaussian_bump", {0.5}, g);
  const RadialProfile cut = cutoff_truncate(p, 2.0);
  CHECK(norms(cut, RegionSpec::all_space()).l2 <=
        norms(p, RegionSpec::all_space()).l2);
}

TEST_CASE("pair distances: identity, zero pair, and order floors") {
  const RadialGrid g = make_grid(8.0, 2049);
  const CauchyDataPair d = make_pair(gaussian_bump(1.0), gaussian_bump(2.0), g);
  CHECK(pair_distance(d, d, SobolevOrder::L2) == doctest::Approx(0.0));
  CHECK(pair_distance(d, d, SobolevOrder::H1) == doctest::Approx(0.0));
  CHECK(pair_distance(d, d, SobolevOrder::H2) == doctest::Approx(0.0));

  CauchyDataPair zero = d;
  zero.position = zero_profile(g);
  zero.velocity = zero_profile(g);
  const double l2_sum = norms(d.position, RegionSpec::all_space()).l2 +
                        norms(d.velocity, RegionSpec::all_space()).l2;
  CHECK(pair_distance(d, zero, SobolevOrder::L2) ==
        doctest::Approx(l2_sum).epsilon(1e-9));

  CauchyDataPair other = make_pair(gaussian_bump(1.0), gaussian_bump(2.0),
                                   make_grid(8.0, 1025));
  CHECK_THROWS_AS(pair_distance(d, other, SobolevOrder::L2),
                  std::invalid_argument);
}

TEST_CASE("neumann data L2 distance shrinks roughly like eps^2") {
  const RadialGrid g = make_grid(4.0, 8193);
  const CauchyDataPair base = make_pair(gaussian_bump(1.0), gaussian_bump(2.0), g);
  const double d1 = pair_distance(neumann_data(base, 0.25), base, SobolevOrder::L2);
  const double d2 = pair_distance(neumann_data(base, 0.125), base, SobolevOrder::L2);
  CHECK(d1 > 0.0);
  const double order = std::log2(d1 / d2);
  CHECK(order > 1.6);
  CHECK(order < 2.4);
}

TEST_CASE("H2 of neumann data stays bounded while dirichlet H2 grows") {
  const RadialGrid g = make_grid(4.0, 8193);
  const CauchyDataPair base = make_pair(gaussian_bump(1.0), gaussian_bump(2.0), g);
  double neumann_max = 0.0, dirichlet_min = 1e300;
  for (double eps : {0.25, 0.125, 0.0625, 0.03125}) {
    neumann_max = std::max(
        neumann_max, pair_distance(neumann_data(base, eps), base, SobolevOrder::H2));
    dirichlet_min = std::min(
        dirichlet_min,
        pair_distance(dirichlet_data(base, eps), base, SobolevOrder::H2));
  }
  // the dirichlet H2 distance at the finest rung dwarfs every neumann one
  const double dir_fine =
      pair_distance(dirichlet_data(base, 0.03125), base, SobolevOrder::H2);
  CHECK(dir_fine / neumann_max > 10.0);
}

TEST_CASE("hardy ball ratio is reported for profiles containing the unit ball") {
  const RadialGrid g = make_grid(2.0, 8001);
  const double ratio = hardy_ball_ratio(sample_profile("poly_bump", {1.0, 4.0}, g));
  CHECK(ratio > 0.0);
  CHECK(std::isfinite(ratio));
}
