#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "cauchy/types.hpp"

namespace cauchy {

/// A complex density f(t) given by an evaluator, optionally with evaluators
/// for its derivatives f', f'', ...
///
/// Derivatives that are not supplied are produced by spectral differentiation
/// of the boundary samples when spectral fallback is enabled (the default).
/// The declared smoothness caps the derivative order any functional may ask
/// for. A decay exponent marks the density as a complement function,
/// F(z) = O(|z|^-m) at infinity.
class BoundaryFunction {
 public:
  using Evaluator = std::function<complex(complex)>;

  BoundaryFunction();
  explicit BoundaryFunction(Evaluator f, std::vector<Evaluator> derivatives = {});

  static BoundaryFunction zero();
  static BoundaryFunction constant(complex c);

  complex operator()(complex t) const { return f_(t); }

  /// f^(order)(t); order 0 is the function itself. Throws CapabilityError
  /// when the evaluator for that order was not supplied.
  complex derivative(int order, complex t) const;
  bool has_derivative(int order) const;
  int supplied_orders() const { return static_cast<int>(derivatives_.size()); }

  int smoothness() const { return smoothness_; }
  BoundaryFunction& with_smoothness(int n);

  std::optional<double> decay_exponent() const { return decay_; }
  BoundaryFunction& with_decay(double m);

  bool spectral_fallback() const { return spectral_; }
  BoundaryFunction& with_spectral_fallback(bool enabled);

  /// alpha * f + beta * g; derivative evaluators are kept up to the common order.
  static BoundaryFunction combine(complex alpha, const BoundaryFunction& f, complex beta,
                                  const BoundaryFunction& g);

 private:
  Evaluator f_;
  std::vector<Evaluator> derivatives_;
  int smoothness_ = std::numeric_limits<int>::max();
  std::optional<double> decay_;
  bool spectral_ = true;
};

}  // namespace cauchy
