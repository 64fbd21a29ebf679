#ifndef RADWAVE_DESCRIPTOR_HPP
#define RADWAVE_DESCRIPTOR_HPP

#include <memory>
#include <string>
#include <vector>

namespace radwave {

// Analytic descriptor of a radial function f(r), r >= 0. Descriptors make
// exact values and derivatives available wherever a profile was built from a
// named family, which keeps derivative accuracy ahead of every measured rate.
class RadialFunction {
 public:
  virtual ~RadialFunction() = default;
  virtual double value(double r) const = 0;
  virtual double deriv(double r) const = 0;
  virtual double second(double r) const = 0;
  // Smallest R with f == 0 for r >= R; +inf if none.
  virtual double support_radius() const = 0;
  virtual std::string name() const = 0;

  // f'' + 2 f'/r, with the r -> 0 limit 3 f''(0) for profiles with f'(0) = 0.
  double laplacian(double r) const;
};

using FunctionPtr = std::shared_ptr<const RadialFunction>;

// e^{-a r^2}
FunctionPtr gaussian_bump(double a);
// (1 - (r/R)^2)^k on [0, R), zero beyond.
FunctionPtr poly_bump(double R, int k);
// r^{delta - 1/2} * poly_bump(R, 4); unbounded at the origin but H^1.
// Evaluation at r = 0 returns the value at r = origin_shift (half-cell
// regularization chosen at sampling time).
FunctionPtr hardy_edge(double delta, double R, double origin_shift);
// e^{-a r}
FunctionPtr exp_decay(double a);
// (1 - ((r-r0)/w)^2)^k on (r0-w, r0+w), zero elsewhere. Smoothly compatible
// with any inner boundary condition when r0 - w stays above the boundary.
FunctionPtr ring_bump(double r0, double w, int k);

// a*f + b*g with analytic derivatives; used for difference profiles.
FunctionPtr linear_combination(double a, FunctionPtr f, double b, FunctionPtr g);

// Factory over the documented family names: gaussian_bump(a), poly_bump(R,k),
// hardy_edge(delta,R), exp_decay(a), ring_bump(r0,w,k). `origin_shift` is the
// half-cell regularization applied to hardy_edge. Unknown names throw
// std::invalid_argument.
FunctionPtr make_family(const std::string& family,
                        const std::vector<double>& params,
                        double origin_shift);

// Radius beyond which |f| stays below tol * |f(0)|; equals support_radius()
// for compactly supported families. Used to bound quadrature and solver
// domains for families with analytic tails.
double effective_support(const RadialFunction& f, double tol = 1e-14);

}  // namespace radwave

#endif
