#include "radwave/boundary_data.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace radwave {

namespace {
void check_arg(double s) {
  if (s < 0.0) throw std::invalid_argument("warp/cutoff argument must be nonnegative");
}
}  // namespace

double beta(double s) {
  check_arg(s);
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return s;
  const double t = s - 1.0;
  return 1.0 + t * t * t * (6.0 + t * (-8.0 + 3.0 * t));
}

double beta_d1(double s) {
  check_arg(s);
  if (s <= 1.0) return 0.0;
  if (s >= 2.0) return 1.0;
  const double t = s - 1.0;
  return t * t * (18.0 + t * (-32.0 + 15.0 * t));
}

double beta_d2(double s) {
  check_arg(s);
  if (s <= 1.0 || s >= 2.0) return 0.0;
  const double t = s - 1.0;
  return t * (36.0 + t * (-96.0 + 60.0 * t));
}

double chi(double s) {
  check_arg(s);
  if (s <= 1.0) return 0.0;
  if (s >= 2.0) return 1.0;
  const double t = s - 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double chi_d1(double s) {
  check_arg(s);
  if (s <= 1.0 || s >= 2.0) return 0.0;
  const double t = s - 1.0;
  return t * t * (30.0 + t * (-60.0 + 30.0 * t));
}

double chi_d2(double s) {
  check_arg(s);
  if (s <= 1.0 || s >= 2.0) return 0.0;
  const double t = s - 1.0;
  return t * (60.0 + t * (-180.0 + 120.0 * t));
}

WarpValidation validate_warp(int n_samples) {
  if (n_samples < 100) throw std::invalid_argument("validate_warp: need >= 100 samples");
  WarpValidation v;
  v.min_gap = 1e300;
  v.min_slope = 1e300;
  v.max_curv_ratio = 0.0;
  for (int i = 1; i <= n_samples; ++i) {
    const double s = 1.0 + static_cast<double>(i) / (n_samples + 1);
    const double gap = s - beta(s);
    const double slope = beta_d1(s);
    v.min_gap = std::min(v.min_gap, gap);
    v.min_slope = std::min(v.min_slope, slope);
    if (slope > 0.0)
      v.max_curv_ratio = std::max(v.max_curv_ratio, std::abs(beta_d2(s)) / slope);
  }
  v.pass = v.min_gap > 0.0 && v.min_slope > 0.0 && std::isfinite(v.max_curv_ratio);
  return v;
}

namespace {

class WarpedData final : public RadialFunction {
 public:
  WarpedData(FunctionPtr base, double eps) : base_(std::move(base)), eps_(eps) {}
  double value(double r) const override { return base_->value(eps_ * beta(r / eps_)); }
  double deriv(double r) const override {
    const double s = r / eps_;
    return base_->deriv(eps_ * beta(s)) * beta_d1(s);
  }
  double second(double r) const override {
    const double s = r / eps_;
    const double b1 = beta_d1(s);
    return base_->second(eps_ * beta(s)) * b1 * b1 +
           base_->deriv(eps_ * beta(s)) * beta_d2(s) / eps_;
  }
  double support_radius() const override {
    // beta(s) <= s, so the warp can only stretch the support outward by at
    // most the warp layer; f(eps beta(r/eps)) = f(r) for r >= 2 eps.
    const double sup = base_->support_radius();
    return std::isfinite(sup) ? std::max(sup, 2.0 * eps_) : sup;
  }
  std::string name() const override {
    std::ostringstream os;
    os << "warp[" << base_->name() << ";eps=" << eps_ << "]";
    return os.str();
  }

 private:
  FunctionPtr base_;
  double eps_;
};

class CutoffData final : public RadialFunction {
 public:
  CutoffData(FunctionPtr base, double eps) : base_(std::move(base)), eps_(eps) {}
  double value(double r) const override { return base_->value(r) * chi(r / eps_); }
  double deriv(double r) const override {
    const double s = r / eps_;
    return base_->deriv(r) * chi(s) + base_->value(r) * chi_d1(s) / eps_;
  }
  double second(double r) const override {
    const double s = r / eps_;
    return base_->second(r) * chi(s) + 2.0 * base_->deriv(r) * chi_d1(s) / eps_ +
           base_->value(r) * chi_d2(s) / (eps_ * eps_);
  }
  double support_radius() const override { return base_->support_radius(); }
  std::string name() const override {
    std::ostringstream os;
    os << "cutoff[" << base_->name() << ";eps=" << eps_ << "]";
    return os.str();
  }

 private:
  FunctionPtr base_;
  double eps_;
};

void check_construction_args(const CauchyDataPair& d, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("boundary data: eps must be positive");
  if (2.0 * eps >= d.position.grid.r_max)
    throw std::invalid_argument("boundary data: need 2*eps < r_max");
  if (eps < 8.0 * d.position.grid.dr)
    throw std::invalid_argument("boundary data: warp layer under-resolved (eps < 8*dr)");
  if (!d.position.grid.same_as(d.velocity.grid))
    throw std::invalid_argument("boundary data: components on different grids");
  if (d.tag == RegularityTag::H1xL2)
    throw std::invalid_argument("boundary data: input must be smooth-compact");
}

// Descriptor-backed profiles warp through the composed descriptor; mollified
// (sample-only) profiles warp by interpolated evaluation.
RadialProfile warp_profile(const RadialProfile& p, double eps) {
  if (p.descriptor) return sample_profile(warp_descriptor(p.descriptor, eps), p.grid);
  RadialProfile out;
  out.grid = p.grid;
  out.descriptor = nullptr;
  out.support_radius = std::isfinite(p.support_radius)
                           ? std::max(p.support_radius, 2.0 * eps)
                           : p.support_radius;
  out.values.resize(p.grid.n_points);
  for (int j = 0; j < p.grid.n_points; ++j)
    out.values[j] = p.value_at(eps * beta(p.grid.nodes[j] / eps));
  return out;
}

RadialProfile cutoff_profile(const RadialProfile& p, double eps) {
  if (p.descriptor) return sample_profile(cutoff_descriptor(p.descriptor, eps), p.grid);
  RadialProfile out;
  out.grid = p.grid;
  out.descriptor = nullptr;
  out.support_radius = p.support_radius;
  out.values.resize(p.grid.n_points);
  for (int j = 0; j < p.grid.n_points; ++j)
    out.values[j] = p.values[j] * chi(p.grid.nodes[j] / eps);
  return out;
}

}  // namespace

FunctionPtr warp_descriptor(FunctionPtr base, double eps) {
  return std::make_shared<WarpedData>(std::move(base), eps);
}

FunctionPtr cutoff_descriptor(FunctionPtr base, double eps) {
  return std::make_shared<CutoffData>(std::move(base), eps);
}

CauchyDataPair neumann_data(const CauchyDataPair& d, double eps) {
  check_construction_args(d, eps);
  CauchyDataPair out;
  out.position = warp_profile(d.position, eps);
  out.velocity = warp_profile(d.velocity, eps);
  out.tag = d.tag;
  return out;
}

CauchyDataPair dirichlet_data(const CauchyDataPair& d, double eps) {
  check_construction_args(d, eps);
  CauchyDataPair out;
  out.position = cutoff_profile(d.position, eps);
  out.velocity = cutoff_profile(d.velocity, eps);
  out.tag = d.tag;
  return out;
}

}  // namespace radwave
