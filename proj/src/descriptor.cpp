#include "radwave/descriptor.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace radwave {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

class GaussianBump final : public RadialFunction {
 public:
  explicit GaussianBump(double a) : a_(a) {
    if (a <= 0.0) throw std::invalid_argument("gaussian_bump: a must be positive");
  }
  double value(double r) const override { return std::exp(-a_ * r * r); }
  double deriv(double r) const override { return -2.0 * a_ * r * value(r); }
  double second(double r) const override {
    return (4.0 * a_ * a_ * r * r - 2.0 * a_) * value(r);
  }
  double support_radius() const override { return kInf; }
  std::string name() const override {
    std::ostringstream os;
    os << "gaussian_bump(" << a_ << ")";
    return os.str();
  }

 private:
  double a_;
};

class PolyBump final : public RadialFunction {
 public:
  PolyBump(double R, int k) : R_(R), k_(k) {
    if (R <= 0.0 || k < 1) throw std::invalid_argument("poly_bump: need R > 0, k >= 1");
  }
  double value(double r) const override {
    if (r >= R_) return 0.0;
    const double u = 1.0 - (r / R_) * (r / R_);
    return std::pow(u, k_);
  }
  double deriv(double r) const override {
    if (r >= R_) return 0.0;
    const double u = 1.0 - (r / R_) * (r / R_);
    return -2.0 * k_ * r / (R_ * R_) * std::pow(u, k_ - 1);
  }
  double second(double r) const override {
    if (r >= R_) return 0.0;
    const double c = 1.0 / (R_ * R_);
    const double u = 1.0 - r * r * c;
    const double uk2 = (k_ >= 2) ? std::pow(u, k_ - 2) : 0.0;
    return 4.0 * k_ * (k_ - 1) * r * r * c * c * uk2 -
           2.0 * k_ * c * std::pow(u, k_ - 1);
  }
  double support_radius() const override { return R_; }
  std::string name() const override {
    std::ostringstream os;
    os << "poly_bump(" << R_ << "," << k_ << ")";
    return os.str();
  }

 private:
  double R_;
  int k_;
};

// f(r) = r^p * b(r), p = delta - 1/2 in (-1/2, 0), b = poly_bump(R, 4).
class HardyEdge final : public RadialFunction {
 public:
  HardyEdge(double delta, double R, double origin_shift)
      : p_(delta - 0.5), bump_(R, 4), shift_(origin_shift) {
    if (delta <= 0.0 || delta >= 0.5)
      throw std::invalid_argument("hardy_edge: need 0 < delta < 1/2");
    if (origin_shift <= 0.0)
      throw std::invalid_argument("hardy_edge: origin shift must be positive");
  }
  double value(double r) const override {
    const double s = (r > 0.0) ? r : shift_;
    return std::pow(s, p_) * bump_.value(s);
  }
  double deriv(double r) const override {
    const double s = (r > 0.0) ? r : shift_;
    return std::pow(s, p_) * (p_ / s * bump_.value(s) + bump_.deriv(s));
  }
  double second(double r) const override {
    const double s = (r > 0.0) ? r : shift_;
    const double rp = std::pow(s, p_);
    return rp * (p_ * (p_ - 1.0) / (s * s) * bump_.value(s) +
                 2.0 * p_ / s * bump_.deriv(s) + bump_.second(s));
  }
  double support_radius() const override { return bump_.support_radius(); }
  std::string name() const override {
    std::ostringstream os;
    os << "hardy_edge(" << p_ + 0.5 << "," << bump_.support_radius()
       << ";r0=" << shift_ << ")";
    return os.str();
  }

 private:
  double p_;
  PolyBump bump_;
  double shift_;
};

class ExpDecay final : public RadialFunction {
 public:
  explicit ExpDecay(double a) : a_(a) {
    if (a <= 0.0) throw std::invalid_argument("exp_decay: a must be positive");
  }
  double value(double r) const override { return std::exp(-a_ * r); }
  double deriv(double r) const override { return -a_ * value(r); }
  double second(double r) const override { return a_ * a_ * value(r); }
  double support_radius() const override { return kInf; }
  std::string name() const override {
    std::ostringstream os;
    os << "exp_decay(" << a_ << ")";
    return os.str();
  }

 private:
  double a_;
};

class RingBump final : public RadialFunction {
 public:
  RingBump(double r0, double w, int k) : r0_(r0), w_(w), k_(k) {
    if (w <= 0.0 || k < 1) throw std::invalid_argument("ring_bump: need w > 0, k >= 1");
    if (r0 - w < 0.0) throw std::invalid_argument("ring_bump: support must stay in r >= 0");
  }
  double value(double r) const override {
    const double x = (r - r0_) / w_;
    if (std::abs(x) >= 1.0) return 0.0;
    return std::pow(1.0 - x * x, k_);
  }
  double deriv(double r) const override {
    const double x = (r - r0_) / w_;
    if (std::abs(x) >= 1.0) return 0.0;
    return -2.0 * k_ * x / w_ * std::pow(1.0 - x * x, k_ - 1);
  }
  double second(double r) const override {
    const double x = (r - r0_) / w_;
    if (std::abs(x) >= 1.0) return 0.0;
    const double u = 1.0 - x * x;
    const double uk2 = (k_ >= 2) ? std::pow(u, k_ - 2) : 0.0;
    return (4.0 * k_ * (k_ - 1) * x * x * uk2 - 2.0 * k_ * std::pow(u, k_ - 1)) /
           (w_ * w_);
  }
  double support_radius() const override { return r0_ + w_; }
  std::string name() const override {
    std::ostringstream os;
    os << "ring_bump(" << r0_ << "," << w_ << "," << k_ << ")";
    return os.str();
  }

 private:
  double r0_, w_;
  int k_;
};

class LinComb final : public RadialFunction {
 public:
  LinComb(double a, FunctionPtr f, double b, FunctionPtr g)
      : a_(a), f_(std::move(f)), b_(b), g_(std::move(g)) {
    if (!f_ || !g_) throw std::invalid_argument("linear_combination: null descriptor");
  }
  double value(double r) const override {
    return a_ * f_->value(r) + b_ * g_->value(r);
  }
  double deriv(double r) const override {
    return a_ * f_->deriv(r) + b_ * g_->deriv(r);
  }
  double second(double r) const override {
    return a_ * f_->second(r) + b_ * g_->second(r);
  }
  double support_radius() const override {
    return std::max(f_->support_radius(), g_->support_radius());
  }
  std::string name() const override {
    std::ostringstream os;
    os << a_ << "*" << f_->name() << "+" << b_ << "*" << g_->name();
    return os.str();
  }

 private:
  double a_;
  FunctionPtr f_;
  double b_;
  FunctionPtr g_;
};

}  // namespace

double RadialFunction::laplacian(double r) const {
  if (r < 1e-12) return 3.0 * second(0.0);
  return second(r) + 2.0 * deriv(r) / r;
}

FunctionPtr gaussian_bump(double a) { return std::make_shared<GaussianBump>(a); }
FunctionPtr poly_bump(double R, int k) { return std::make_shared<PolyBump>(R, k); }
FunctionPtr hardy_edge(double delta, double R, double origin_shift) {
  return std::make_shared<HardyEdge>(delta, R, origin_shift);
}
FunctionPtr exp_decay(double a) { return std::make_shared<ExpDecay>(a); }
FunctionPtr ring_bump(double r0, double w, int k) {
  return std::make_shared<RingBump>(r0, w, k);
}
FunctionPtr linear_combination(double a, FunctionPtr f, double b, FunctionPtr g) {
  return std::make_shared<LinComb>(a, std::move(f), b, std::move(g));
}

FunctionPtr make_family(const std::string& family,
                        const std::vector<double>& params, double origin_shift) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      std::ostringstream os;
      os << "family " << family << " expects " << n << " parameter(s), got "
         << params.size();
      throw std::invalid_argument(os.str());
    }
  };
  if (family == "gaussian_bump") { need(1); return gaussian_bump(params[0]); }
  if (family == "poly_bump") { need(2); return poly_bump(params[0], static_cast<int>(params[1])); }
  if (family == "hardy_edge") { need(2); return hardy_edge(params[0], params[1], origin_shift); }
  if (family == "exp_decay") { need(1); return exp_decay(params[0]); }
  if (family == "ring_bump") { need(3); return ring_bump(params[0], params[1], static_cast<int>(params[2])); }
  throw std::invalid_argument("unknown analytic family: " + family);
}

double effective_support(const RadialFunction& f, double tol) {
  const double sup = f.support_radius();
  if (std::isfinite(sup)) return sup;
  const double scale = std::abs(f.value(0.0));
  double r = 1.0;
  while (r < 1e6) {
    // once past the last sign structure these families decay monotonically
    if (std::abs(f.value(r)) < tol * scale && std::abs(f.value(1.25 * r)) < tol * scale)
      return r;
    r *= 1.25;
  }
  return r;
}

}  // namespace radwave
