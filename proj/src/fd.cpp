#include "radwave/fd.hpp"

#include <stdexcept>

namespace radwave {

std::vector<double> deriv1_fd4(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 6) throw std::invalid_argument("deriv1_fd4: need at least 6 samples");
  std::vector<double> d(n);
  const double ih = 1.0 / h;
  auto left = [&](std::size_t j) {
    return (-25.0 * f[j] + 48.0 * f[j + 1] - 36.0 * f[j + 2] + 16.0 * f[j + 3] -
            3.0 * f[j + 4]) / 12.0 * ih;
  };
  auto right = [&](std::size_t j) {
    return (25.0 * f[j] - 48.0 * f[j - 1] + 36.0 * f[j - 2] - 16.0 * f[j - 3] +
            3.0 * f[j - 4]) / 12.0 * ih;
  };
  d[0] = left(0);
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / 12.0 * ih;
  for (std::size_t j = 2; j + 2 < n; ++j)
    d[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) / 12.0 * ih;
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] -
              f[n - 5]) / 12.0 * ih;
  d[n - 1] = right(n - 1);
  return d;
}

std::vector<double> deriv2_fd4(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 7) throw std::invalid_argument("deriv2_fd4: need at least 7 samples");
  std::vector<double> d(n);
  const double ih2 = 1.0 / (h * h);
  // one-sided 4th-order second-derivative stencils (6 points)
  auto left = [&](std::size_t j) {
    return (45.0 * f[j] - 154.0 * f[j + 1] + 214.0 * f[j + 2] - 156.0 * f[j + 3] +
            61.0 * f[j + 4] - 10.0 * f[j + 5]) / 12.0 * ih2;
  };
  auto right = [&](std::size_t j) {
    return (45.0 * f[j] - 154.0 * f[j - 1] + 214.0 * f[j - 2] - 156.0 * f[j - 3] +
            61.0 * f[j - 4] - 10.0 * f[j - 5]) / 12.0 * ih2;
  };
  d[0] = left(0);
  d[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] +
          f[5]) / 12.0 * ih2;
  for (std::size_t j = 2; j + 2 < n; ++j)
    d[j] = (-f[j - 2] + 16.0 * f[j - 1] - 30.0 * f[j] + 16.0 * f[j + 1] -
            f[j + 2]) / 12.0 * ih2;
  d[n - 2] = (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] -
              6.0 * f[n - 5] + f[n - 6]) / 12.0 * ih2;
  d[n - 1] = right(n - 1);
  return d;
}

}  // namespace radwave
