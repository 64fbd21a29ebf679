#ifndef RADWAVE_BOUNDARY_DATA_HPP
#define RADWAVE_BOUNDARY_DATA_HPP

#include "radwave/profile.hpp"

namespace radwave {

// Radial warp beta: C^2, nondecreasing, beta == 1 on [0,1], beta(s) = s on
// [2,inf), quintic transition on (1,2).
double beta(double s);
double beta_d1(double s);
double beta_d2(double s);

// Radial cutoff chi: C^2, nondecreasing, chi == 0 on [0,1], chi == 1 on
// [2,inf), quintic smoothstep transition on (1,2).
double chi(double s);
double chi_d1(double s);
double chi_d2(double s);

struct WarpValidation {
  double min_gap = 0.0;        // min of s - beta(s) over the sampled (1,2)
  double min_slope = 0.0;      // min of beta'(s)
  double max_curv_ratio = 0.0; // max of |beta''(s)| / beta'(s); the empirical
                               // constant C of |beta''| <= C beta'. Grows with
                               // sample density (the ratio behaves like
                               // 2/(s-1) near s=1), so it is reported rather
                               // than asserted against a fixed value.
  bool pass = false;
};

// Samples n_samples points strictly inside (1,2). Requires n_samples >= 100.
WarpValidation validate_warp(int n_samples);

// Neumann data: both components replaced by r -> f(eps * beta(r / eps)).
// Constant on [0, eps], equal to the input on [2 eps, inf), zero radial
// derivative at r = eps. Requires descriptor-backed (or mollified-smooth)
// input, 0 < 2 eps < r_max and eps >= 8 dr.
CauchyDataPair neumann_data(const CauchyDataPair& d, double eps);

// Dirichlet data: both components replaced by r -> f(r) * chi(r / eps).
// Identically zero on [0, eps], equal to the input on [2 eps, inf).
CauchyDataPair dirichlet_data(const CauchyDataPair& d, double eps);

// Descriptor composition used by the constructions; exposed for tests and
// for building compatible solver data directly from a family.
FunctionPtr warp_descriptor(FunctionPtr base, double eps);
FunctionPtr cutoff_descriptor(FunctionPtr base, double eps);

}  // namespace radwave

#endif
