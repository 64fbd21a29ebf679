#ifndef RADWAVE_QUADRATURE_HPP
#define RADWAVE_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace radwave {

// Composite Simpson on uniformly spaced samples. An odd interval count is
// closed with a Simpson 3/8 block at the right end, so any n >= 2 intervals
// integrate at 4th order. n == 1 falls back to the trapezoid rule.
double simpson(std::span<const double> f, double h);

// Integral over the node range [i0, i1] of uniformly sampled f.
double simpson_range(std::span<const double> f, double h, std::size_t i0,
                     std::size_t i1);

// 5-point Gauss-Legendre on [a, b].
double gauss5(const std::function<double(double)>& fn, double a, double b);

// Cumulative integral G[j] = int_{x0}^{x0 + j*h} fn, one Gauss-5 panel per
// cell. Exact to machine precision for piecewise-smooth fn with breakpoints
// on cell boundaries.
std::vector<double> cumulative_gauss(const std::function<double(double)>& fn,
                                     double x0, double h, std::size_t n_cells);

}  // namespace radwave

#endif
