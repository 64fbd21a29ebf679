#include "radwave/quadrature.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace radwave {

double simpson(std::span<const double> f, double h) {
  const std::size_t m = f.size();
  if (m < 2) return 0.0;
  const std::size_t n = m - 1;  // interval count
  if (n == 1) return 0.5 * h * (f[0] + f[1]);

  std::size_t stop = n;  // intervals handled by plain Simpson
  double tail = 0.0;
  if (n % 2 != 0) {
    stop = n - 3;
    const std::size_t j = stop;
    tail = 3.0 * h / 8.0 * (f[j] + 3.0 * f[j + 1] + 3.0 * f[j + 2] + f[j + 3]);
  }
  double odd = 0.0, even = 0.0;
  for (std::size_t j = 1; j < stop; j += 2) odd += f[j];
  for (std::size_t j = 2; j < stop; j += 2) even += f[j];
  double core = 0.0;
  if (stop > 0) core = h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[stop]);
  return core + tail;
}

double simpson_range(std::span<const double> f, double h, std::size_t i0,
                     std::size_t i1) {
  if (i1 <= i0) return 0.0;
  if (i1 >= f.size()) throw std::invalid_argument("simpson_range: range exceeds samples");
  return simpson(f.subspan(i0, i1 - i0 + 1), h);
}

namespace {
// Nodes/weights for 5-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kGx = {
    -0.9061798459386639928, -0.5384693101056830910, 0.0,
    0.5384693101056830910, 0.9061798459386639928};
constexpr std::array<double, 5> kGw = {
    0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
    0.4786286704993664680, 0.2369268850561890875};
}  // namespace

double gauss5(const std::function<double(double)>& fn, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += kGw[i] * fn(mid + half * kGx[i]);
  return half * s;
}

std::vector<double> cumulative_gauss(const std::function<double(double)>& fn,
                                     double x0, double h, std::size_t n_cells) {
  std::vector<double> g(n_cells + 1, 0.0);
  for (std::size_t j = 0; j < n_cells; ++j) {
    g[j + 1] = g[j] + gauss5(fn, x0 + j * h, x0 + (j + 1) * h);
  }
  return g;
}

}  // namespace radwave
