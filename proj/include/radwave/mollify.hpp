#ifndef RADWAVE_MOLLIFY_HPP
#define RADWAVE_MOLLIFY_HPP

#include "radwave/profile.hpp"

namespace radwave {

// Radial profile of the standard 3-d mollifier: eta(x) = bump(|x|) with
// bump(tau) = A exp(-1/(1-tau^2)) for tau < 1, zero beyond, and A fixed so
// that the 3-d integral of eta is one: 4*pi*int_0^1 tau^2 bump(tau) dtau = 1.
double mollifier_bump(double tau);

// Radial profile of the 3-d convolution (P * eta_delta)(x) for P(x) = p(|x|),
// eta_delta(x) = delta^-3 eta(x/delta), computed through the exact 1-d
// reduction
//   (P*eta_delta)(r) = (2 pi / r) int_0^inf s p(s)
//                      [ int_{|r-s|}^{r+s} tau eta_delta(tau) dtau ] ds,
// with the r = 0 limit 4 pi int_0^inf s^2 p(s) eta_delta(s) ds.
// Requires 0 < delta < r_max / 4.
RadialProfile radial_mollify(const RadialProfile& p, double delta);

}  // namespace radwave

#endif
