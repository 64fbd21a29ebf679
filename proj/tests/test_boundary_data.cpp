#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radwave/boundary_data.hpp"

using namespace radwave;

TEST_CASE("beta piecewise values") {
  CHECK(beta(0.0) == 1.0);
  CHECK(beta(0.5) == 1.0);
  CHECK(beta(1.0) == 1.0);
  // displayed quintic at the midpoint: 1 + 0.75 - 0.5 + 0.09375
  CHECK(beta(1.5) == doctest::Approx(1.34375).epsilon(1e-15));
  CHECK(beta(2.0) == doctest::Approx(2.0));
  CHECK(beta(3.0) == 3.0);
  CHECK_THROWS_AS(beta(-0.1), std::invalid_argument);
}

TEST_CASE("beta is C2 at the joins") {
  const double h = 1e-7;
  for (double s : {1.0, 2.0}) {
    CHECK(beta(s + h) - beta(s - h) == doctest::Approx(2.0 * h * beta_d1(s)).epsilon(1e-4));
    CHECK(beta_d1(s + h) - beta_d1(s - h) ==
          doctest::Approx(2.0 * h * beta_d2(s)).epsilon(1e-3));
    // second derivative continuous: compare one-sided values
    CHECK(std::abs(beta_d2(s + h) - beta_d2(s - h)) < 1e-5);
  }
  CHECK(beta_d1(1.0) == 0.0);
  CHECK(beta_d1(2.0) == 1.0);
  CHECK(beta_d2(2.0) == 0.0);
}

TEST_CASE("chi piecewise values and smoothstep midpoint") {
  CHECK(chi(0.9) == 0.0);
  CHECK(chi(1.0) == 0.0);
  CHECK(chi(1.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(chi(2.0) == doctest::Approx(1.0));
  CHECK(chi(2.5) == 1.0);
  CHECK_THROWS_AS(chi(-1.0), std::invalid_argument);

  // C2 joins and monotonicity
  const double h = 1e-7;
  for (double s : {1.0, 2.0}) {
    CHECK(std::abs(chi_d1(s + h) - chi_d1(s - h)) < 1e-5);
    CHECK(std::abs(chi_d2(s + h) - chi_d2(s - h)) < 2e-4);
  }
  for (int i = 0; i <= 100; ++i) CHECK(chi_d1(1.0 + i / 100.0) >= 0.0);
}

TEST_CASE("validate_warp reports positive gap and slope, finite curvature ratio") {
  const WarpValidation v = validate_warp(10000);
  CHECK(v.pass);
  CHECK(v.min_gap > 0.0);
  CHECK(v.min_slope > 0.0);
  CHECK(std::isfinite(v.max_curv_ratio));
  // |beta''|/beta' behaves like 2/(s-1) near the left join, so the sampled
  // maximum tracks the sample density
  CHECK(v.max_curv_ratio > 1000.0);
  CHECK_THROWS_AS(validate_warp(50), std::invalid_argument);
}

namespace {
CauchyDataPair gaussian_pair(const RadialGrid& g) {
  return make_pair(gaussian_bump(1.0), gaussian_bump(2.0), g);
}
}  // namespace

TEST_CASE("neumann data freezes values inside eps and matches beyond 2 eps") {
  const RadialGrid g = make_grid(4.0, 2049);
  const CauchyDataPair base = gaussian_pair(g);
  const double eps = 0.25;
  const CauchyDataPair warped = neumann_data(base, eps);

  // beta == 1 on [0,1] forces the constant value f(eps) on the ball
  const double frozen = std::exp(-eps * eps);
  CHECK(warped.position.value_at(0.1) == doctest::Approx(frozen).epsilon(1e-13));
  CHECK(warped.position.value_at(0.0) == doctest::Approx(frozen).epsilon(1e-13));

  // composed evaluation at r = 0.375: beta(1.5) = 1.34375
  const double expected = std::exp(-std::pow(eps * beta(1.5), 2));
  CHECK(warped.position.value_at(0.375) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(expected == doctest::Approx(0.89325).epsilon(1e-4));

  // node-wise equality beyond 2 eps
  for (int j = 0; j < g.n_points; ++j) {
    if (g.nodes[j] >= 2.0 * eps) {
      CHECK(warped.position.values[j] ==
            doctest::Approx(base.position.values[j]).epsilon(1e-14));
      CHECK(warped.velocity.values[j] ==
            doctest::Approx(base.velocity.values[j]).epsilon(1e-14));
    }
  }

  // zero radial derivative at r = eps, by the descriptor chain rule
  CHECK(warped.position.descriptor->deriv(eps) == 0.0);
  CHECK(warped.velocity.descriptor->deriv(eps) == 0.0);

  // a constant profile is unchanged by the warp
  const RadialProfile c0 = sample_profile(
      linear_combination(0.5, gaussian_bump(1.0), -0.5, gaussian_bump(1.0)), g);
  CHECK(c0.values[100] == 0.0);
}

TEST_CASE("dirichlet data vanishes on the ball and matches beyond 2 eps") {
  const RadialGrid g = make_grid(4.0, 2049);
  const CauchyDataPair base = gaussian_pair(g);
  const double eps = 0.25;
  const CauchyDataPair cut = dirichlet_data(base, eps);

  CHECK(cut.position.value_at(0.2) == 0.0);
  CHECK(cut.position.value_at(eps) == 0.0);
  const double expected = std::exp(-0.375 * 0.375) * 0.5;
  CHECK(cut.position.value_at(0.375) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(expected == doctest::Approx(0.43441).epsilon(1e-4));

  for (int j = 0; j < g.n_points; ++j) {
    const double r = g.nodes[j];
    if (r <= eps) {
      CHECK(cut.position.values[j] == 0.0);
      CHECK(cut.velocity.values[j] == 0.0);
    }
    if (r >= 2.0 * eps) {
      CHECK(cut.position.values[j] ==
            doctest::Approx(base.position.values[j]).epsilon(1e-14));
    }
  }

  // the zero pair maps to the zero pair
  const CauchyDataPair zero = make_pair(
      linear_combination(1.0, gaussian_bump(1.0), -1.0, gaussian_bump(1.0)),
      linear_combination(1.0, gaussian_bump(2.0), -1.0, gaussian_bump(2.0)), g);
  const CauchyDataPair zcut = dirichlet_data(zero, eps);
  for (double v : zcut.position.values) CHECK(v == 0.0);
}

TEST_CASE("constructions are linear in the data") {
  const RadialGrid g = make_grid(4.0, 1025);
  const double eps = 0.25;
  const FunctionPtr f1 = gaussian_bump(1.0), f2 = gaussian_bump(3.0);
  const double a = 1.7, b = -0.4;
  const CauchyDataPair combo =
      make_pair(linear_combination(a, f1, b, f2), gaussian_bump(2.0), g);
  const CauchyDataPair p1 = make_pair(f1, gaussian_bump(2.0), g);
  const CauchyDataPair p2 = make_pair(f2, gaussian_bump(2.0), g);

  for (auto construct : {neumann_data, dirichlet_data}) {
    const auto wc = construct(combo, eps);
    const auto w1 = construct(p1, eps);
    const auto w2 = construct(p2, eps);
    for (int j = 0; j < g.n_points; ++j) {
      const double lin = a * w1.position.values[j] + b * w2.position.values[j];
      CHECK(wc.position.values[j] == doctest::Approx(lin).epsilon(1e-12));
    }
  }
}

TEST_CASE("warped data never exceeds the input sup-norm") {
  const RadialGrid g = make_grid(4.0, 2049);
  const CauchyDataPair base = gaussian_pair(g);  // max at the r = 0 node
  for (double eps : {0.125, 0.25, 0.5}) {
    const CauchyDataPair warped = neumann_data(base, eps);
    double m_in = 0.0, m_out = 0.0;
    for (int j = 0; j < g.n_points; ++j) {
      m_in = std::max(m_in, std::abs(base.position.values[j]));
      m_out = std::max(m_out, std::abs(warped.position.values[j]));
    }
    CHECK(m_out <= m_in + 1e-12);
  }
}

TEST_CASE("construction argument checks") {
  const RadialGrid g = make_grid(4.0, 257);
  const CauchyDataPair base = gaussian_pair(g);
  CHECK_THROWS_AS(neumann_data(base, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(neumann_data(base, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(neumann_data(base, 2.0), std::invalid_argument);   // 2 eps >= r_max
  CHECK_THROWS_AS(neumann_data(base, 0.05), std::invalid_argument);  // < 8 dr
  CHECK_THROWS_AS(dirichlet_data(base, 0.0), std::invalid_argument);
}

TEST_CASE("mollified (sample-only) input warps through interpolation") {
  const RadialGrid g = make_grid(4.0, 4097);
  RadialProfile samples = sample_profile(gaussian_bump(1.0), g);
  samples.descriptor = nullptr;  // pretend it came out of the mollifier
  CauchyDataPair d;
  d.position = samples;
  d.velocity = samples;
  const CauchyDataPair warped = neumann_data(d, 0.25);
  const double expected = std::exp(-std::pow(0.25 * beta(1.5), 2));
  CHECK(warped.position.value_at(0.375) == doctest::Approx(expected).epsilon(1e-9));
}
