#include "cauchy/boundary_function.hpp"

#include <algorithm>

namespace cauchy {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGrid: return "invalid-grid";
    case ErrorCode::InvalidPoint: return "invalid-point";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::OnContour: return "on-contour";
    case ErrorCode::NonFiniteResult: return "non-finite-result";
    case ErrorCode::CapabilityError: return "capability-error";
    case ErrorCode::ContractViolation: return "contract-violation";
    case ErrorCode::EndpointSingularity: return "endpoint-singularity";
    case ErrorCode::PrescriptionError: return "prescription-error";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::UsageError: return "usage-error";
  }
  return "unknown-error";
}

BoundaryFunction::BoundaryFunction() : f_([](complex) { return complex{}; }) {}

BoundaryFunction::BoundaryFunction(Evaluator f, std::vector<Evaluator> derivatives)
    : f_(std::move(f)), derivatives_(std::move(derivatives)) {
  if (!f_) throw Error(ErrorCode::CapabilityError, "boundary function needs an evaluator");
}

BoundaryFunction BoundaryFunction::zero() { return constant(0.0); }

BoundaryFunction BoundaryFunction::constant(complex c) {
  std::vector<Evaluator> d(8, [](complex) { return complex{}; });
  return BoundaryFunction([c](complex) { return c; }, std::move(d));
}

complex BoundaryFunction::derivative(int order, complex t) const {
  if (order == 0) return f_(t);
  if (!has_derivative(order)) {
    throw Error(ErrorCode::CapabilityError,
                "derivative of order " + std::to_string(order) + " not supplied");
  }
  return derivatives_[static_cast<std::size_t>(order - 1)](t);
}

bool BoundaryFunction::has_derivative(int order) const {
  if (order == 0) return true;
  return order > 0 && order <= supplied_orders() && derivatives_[order - 1];
}

BoundaryFunction& BoundaryFunction::with_smoothness(int n) {
  if (n < 0) throw Error(ErrorCode::ContractViolation, "smoothness must be non-negative");
  smoothness_ = n;
  return *this;
}

BoundaryFunction& BoundaryFunction::with_decay(double m) {
  decay_ = m;
  return *this;
}

BoundaryFunction& BoundaryFunction::with_spectral_fallback(bool enabled) {
  spectral_ = enabled;
  return *this;
}

BoundaryFunction BoundaryFunction::combine(complex alpha, const BoundaryFunction& f,
                                           complex beta, const BoundaryFunction& g) {
  const int common = std::min(f.supplied_orders(), g.supplied_orders());
  std::vector<Evaluator> d;
  for (int k = 1; k <= common; ++k) {
    d.push_back([=](complex t) { return alpha * f.derivative(k, t) + beta * g.derivative(k, t); });
  }
  BoundaryFunction out([=](complex t) { return alpha * f(t) + beta * g(t); }, std::move(d));
  out.smoothness_ = std::min(f.smoothness_, g.smoothness_);
  out.spectral_ = f.spectral_ && g.spectral_;
  if (f.decay_ && g.decay_) out.decay_ = std::min(*f.decay_, *g.decay_);
  return out;
}

}  // namespace cauchy
