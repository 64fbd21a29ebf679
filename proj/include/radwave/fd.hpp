#ifndef RADWAVE_FD_HPP
#define RADWAVE_FD_HPP

#include <span>
#include <vector>

namespace radwave {

// 4th-order first derivative of uniform samples: centered in the interior,
// one-sided 4th-order stencils at the two ends.
std::vector<double> deriv1_fd4(std::span<const double> f, double h);

// 4th-order second derivative, same stencil policy.
std::vector<double> deriv2_fd4(std::span<const double> f, double h);

// One-sided 2nd-order first derivative at the left end of a sample range.
inline double deriv1_left2(double f0, double f1, double f2, double h) {
  return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

}  // namespace radwave

#endif
