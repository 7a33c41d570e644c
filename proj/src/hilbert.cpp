#include "cauchy/hilbert.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <memory>
#include <numeric>

#include "cauchy/quadrature.hpp"
#include "cauchy/spectral.hpp"

namespace cauchy {

namespace {

constexpr double kPanelWidth = 0.5;
constexpr std::size_t kPanelOrder = 16;
constexpr std::size_t kTailOrder = 48;
constexpr std::size_t kPeriodicSamples = 512;

// Power-law tail model sum_k c_k |x|^-(p+k), one per side.
struct TailModel {
  std::vector<double> c;
  double p = 1.0;
  int side = 1;

  double operator()(double x) const {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::pow(ax, -(p + static_cast<double>(k)));
    return acc;
  }
};

TailModel fit_tail(const std::function<double(double)>& f, double X, double p, int side,
                   const std::vector<double>& fractions) {
  const auto m = static_cast<Eigen::Index>(fractions.size());
  Eigen::MatrixXd A(m, m);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double r = fractions[static_cast<std::size_t>(i)];
    for (Eigen::Index k = 0; k < m; ++k) A(i, k) = std::pow(r, -(p + static_cast<double>(k)));
    b(i) = f(side * r * X);
  }
  const Eigen::VectorXd scaled = A.partialPivLu().solve(b);
  TailModel t;
  t.p = p;
  t.side = side;
  t.c.resize(fractions.size());
  for (Eigen::Index k = 0; k < m; ++k) {
    t.c[static_cast<std::size_t>(k)] = scaled(k) * std::pow(X, p + static_cast<double>(k));
  }
  return t;
}

class LineWindow {
 public:
  explicit LineWindow(const RealLineFunction& v) : f_(v.f), X_(v.half_width), p_(v.decay) {
    if (!f_) throw Error(ErrorCode::ContractViolation, "line function needs an evaluator");
    if (!(p_ >= 1.0)) throw Error(ErrorCode::ContractViolation, "line transforms need decay exponent >= 1");
    if (!(X_ > 0.0)) throw Error(ErrorCode::ContractViolation, "window half-width must be positive");
    const auto panels = static_cast<std::size_t>(std::ceil(2.0 * X_ / kPanelWidth));
    const QuadratureGrid g = gauss_legendre_panels(-X_, X_, panels, kPanelOrder);
    x_ = g.nodes;
    w_ = g.weights;
    vals_.resize(x_.size());
    for (std::size_t j = 0; j < x_.size(); ++j) vals_[j] = f_(x_[j]);
    const QuadratureGrid t = mapped(gauss_legendre(kTailOrder), 0.0, 1.0);
    s_ = t.nodes;
    sw_ = t.weights;
    for (int side : {1, -1}) {
      tails3_.push_back(fit_tail(f_, X_, p_, side, {0.5, 0.7, 0.9}));
      tails2_.push_back(fit_tail(f_, X_, p_, side, {0.7, 0.9}));
    }
    for (int side : {1, -1}) {
      const double predicted = std::abs(f_(side * 0.45 * X_)) * std::pow(0.5, p_);
      if (std::abs(f_(side * 0.9 * X_)) > 10.0 * predicted + 1e-300) decay_inconsistent_ = true;
    }
  }

  double half_width() const { return X_; }
  std::size_t size() const { return x_.size(); }
  bool decay_inconsistent() const { return decay_inconsistent_; }

  /// (1/pi) P-integral of f(x)/(x - xi) and the tail-model error bar.
  double transform(double xi, double* error_bar) const {
    if (!std::isfinite(xi)) throw Error(ErrorCode::InvalidPoint, "transform target is not finite");
    if (std::abs(xi) >= X_) throw Error(ErrorCode::DomainError, "transform target outside the truncation window");
    const double fx = f_(xi);
    double acc = 0.0;
    for (std::size_t j = 0; j < x_.size(); ++j) {
      const double d = x_[j] - xi;
      if (std::abs(d) < 1e-9) {
        const double h = 1e-3;
        const double df = (-f_(xi + 2 * h) + 8 * f_(xi + h) - 8 * f_(xi - h) + f_(xi - 2 * h)) / (12 * h);
        acc += df * w_[j];
      } else {
        acc += (vals_[j] - fx) / d * w_[j];
      }
    }
    acc += fx * std::log((X_ - xi) / (X_ + xi));
    double t3 = 0.0, t2 = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      t3 += tail_integral(tails3_[k], xi);
      t2 += tail_integral(tails2_[k], xi);
    }
    if (error_bar) *error_bar = std::abs(t3 - t2) / pi;
    const double u = (acc + t3) / pi;
    if (!std::isfinite(u)) throw Error(ErrorCode::NonFiniteResult, "line transform is not finite");
    return u;
  }

  double square_integral() const {
    double acc = 0.0;
    for (std::size_t j = 0; j < x_.size(); ++j) acc += vals_[j] * vals_[j] * w_[j];
    for (const auto& t : tails3_) {
      for (std::size_t k = 0; k < t.c.size(); ++k) {
        for (std::size_t l = 0; l < t.c.size(); ++l) {
          const double q = 2.0 * t.p + static_cast<double>(k + l);
          acc += t.c[k] * t.c[l] * std::pow(X_, 1.0 - q) / (q - 1.0);
        }
      }
    }
    return acc;
  }

 private:
  // integral over |x| > X on the model's side of model(x)/(x - xi), via x = side X / s
  double tail_integral(const TailModel& t, double xi) const {
    double acc = 0.0;
    for (std::size_t j = 0; j < s_.size(); ++j) {
      const double x = t.side * X_ / s_[j];
      acc += t(x) / (x - xi) * X_ / (s_[j] * s_[j]) * sw_[j];
    }
    return acc;
  }

  std::function<double(double)> f_;
  double X_;
  double p_;
  std::vector<double> x_, w_, vals_, s_, sw_;
  std::vector<TailModel> tails3_, tails2_;
  bool decay_inconsistent_ = false;
};

TrigInterpolant periodic_line_transform(const RealLineFunction& v) {
  const double P = *v.period;
  if (!(P > 0.0)) throw Error(ErrorCode::ContractViolation, "period must be positive");
  const PeriodicFunction samples =
      PeriodicFunction::from([&](double th) { return v.f(P * th / (2.0 * pi)); }, kPeriodicSamples);
  const PeriodicFunction u = hilbert_circular(samples);
  std::vector<complex> c(u.samples.begin(), u.samples.end());
  return TrigInterpolant(c, -0.5 * P, P);
}

TransformResult line_transform(const RealLineFunction& v, const std::vector<double>& targets,
                               double sign) {
  TransformResult r;
  r.targets = targets;
  r.values.resize(targets.size());
  r.error_bar.assign(targets.size(), 0.0);
  if (v.period) {
    const TrigInterpolant interp = periodic_line_transform(v);
    r.periodic_route = true;
    r.grid_size = kPeriodicSamples;
    r.half_width = 0.5 * *v.period;
    for (std::size_t i = 0; i < targets.size(); ++i) r.values[i] = sign * interp(targets[i]).real();
    return r;
  }
  const LineWindow win(v);
  r.half_width = win.half_width();
  r.grid_size = win.size();
  r.decay_inconsistent = win.decay_inconsistent();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (std::abs(targets[i]) > 0.5 * r.half_width) r.accuracy_warning = true;
    r.values[i] = sign * win.transform(targets[i], &r.error_bar[i]);
  }
  return r;
}

void check_circular(const PeriodicFunction& v) {
  const std::size_t n = v.size();
  if (n < 8 || n % 2 != 0) {
    throw Error(ErrorCode::InvalidGrid, "circular transform needs an even sample count >= 8");
  }
}

PeriodicFunction negated(PeriodicFunction p) {
  for (auto& x : p.samples) x = -x;
  return p;
}

}  // namespace

TransformResult hilbert_line(const RealLineFunction& v, const std::vector<double>& targets) {
  return line_transform(v, targets, 1.0);
}

TransformResult hilbert_line_inverse(const RealLineFunction& u, const std::vector<double>& targets) {
  return line_transform(u, targets, -1.0);
}

TransformResult hilbert_complementary(const RealLineFunction& V, const std::vector<double>& targets) {
  return line_transform(V, targets, -1.0);
}

TransformResult hilbert_complementary_inverse(const RealLineFunction& U,
                                              const std::vector<double>& targets) {
  return line_transform(U, targets, 1.0);
}

RealLineFunction hilbert_line_function(const RealLineFunction& v) {
  RealLineFunction out;
  out.half_width = v.half_width;
  out.decay = 1.0;
  if (v.period) {
    const TrigInterpolant interp = periodic_line_transform(v);
    out.period = v.period;
    out.f = [interp](double x) { return interp(x).real(); };
    return out;
  }
  auto win = std::make_shared<const LineWindow>(v);
  out.f = [win](double xi) { return win->transform(xi, nullptr); };
  return out;
}

PeriodicFunction PeriodicFunction::from(const std::function<double(double)>& f, std::size_t n) {
  PeriodicFunction p;
  p.samples.resize(n);
  for (std::size_t j = 0; j < n; ++j) p.samples[j] = f(angle(j, n));
  return p;
}

double PeriodicFunction::angle(std::size_t j, std::size_t n) {
  return -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
}

double PeriodicFunction::mean() const {
  if (samples.empty()) return 0.0;
  return std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
}

PeriodicFunction hilbert_circular(const PeriodicFunction& v) {
  check_circular(v);
  const std::size_t n = v.size();
  const double dphi = 2.0 * pi / static_cast<double>(n);
  const std::vector<double> dv = periodic_derivative(v.samples, 1);
  PeriodicFunction u;
  u.samples.resize(n);
  u.carried_mean = v.mean();
  // cot((phi_j - theta_i)/2) depends only on j - i
  std::vector<double> cot(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) cot[k] = 1.0 / std::tan(0.5 * dphi * static_cast<double>(k));
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 2.0 * dv[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      acc += (v.samples[j] - v.samples[i]) * cot[(j + n - i) % n];
    }
    u.samples[i] = acc * dphi / (2.0 * pi);
  }
  return u;
}

PeriodicFunction hilbert_circular_inverse(const PeriodicFunction& u) { return negated(hilbert_circular(u)); }

PeriodicFunction hilbert_circular_complementary(const PeriodicFunction& V) {
  return negated(hilbert_circular(V));
}

PeriodicFunction hilbert_circular_complementary_inverse(const PeriodicFunction& U) {
  return hilbert_circular(U);
}

NormalizationCheck normalization_check(const std::vector<complex>& samples, double tol) {
  NormalizationCheck nc;
  if (samples.empty()) return nc;
  complex acc = 0.0;
  for (const auto& s : samples) acc += s;
  nc.integral = acc * (2.0 * pi / static_cast<double>(samples.size()));
  nc.normalized = std::abs(nc.integral) < tol;
  return nc;
}

ParsevalCheck parseval_circle(const PeriodicFunction& u, const PeriodicFunction& v) {
  auto energy = [](const PeriodicFunction& p) {
    double acc = 0.0;
    for (double x : p.samples) acc += x * x;
    return p.samples.empty() ? 0.0 : acc * 2.0 * pi / static_cast<double>(p.samples.size());
  };
  ParsevalCheck pc;
  pc.lhs = energy(u);
  pc.rhs = energy(v);
  pc.gap = std::abs(pc.lhs - pc.rhs);
  return pc;
}

ParsevalCheck parseval_line(const RealLineFunction& u, const RealLineFunction& v) {
  if (u.period || v.period) {
    throw Error(ErrorCode::ContractViolation, "line Parseval check needs square-integrable inputs");
  }
  for (const auto* f : {&u, &v}) {
    if (!(f->decay > 0.5)) throw Error(ErrorCode::ContractViolation, "square integrability needs decay > 1/2");
  }
  RealLineFunction uu = u, vv = v;
  uu.decay = std::max(u.decay, 1.0);
  vv.decay = std::max(v.decay, 1.0);
  ParsevalCheck pc;
  pc.lhs = LineWindow(uu).square_integral();
  pc.rhs = LineWindow(vv).square_integral();
  pc.gap = std::abs(pc.lhs - pc.rhs);
  return pc;
}

}  // namespace cauchy
