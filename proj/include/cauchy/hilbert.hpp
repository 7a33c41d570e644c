#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cauchy/types.hpp"

namespace cauchy {

/// Real function on the line with declared power-law decay |f| = O(|x|^-p).
/// A set period routes transforms through the circular machinery instead of
/// the truncated window.
struct RealLineFunction {
  std::function<double(double)> f;
  double decay = 2.0;
  double half_width = 50.0;
  std::optional<double> period;

  double operator()(double x) const { return f(x); }
};

struct TransformResult {
  std::vector<double> targets;
  std::vector<double> values;
  /// difference between the three- and two-term tail models
  std::vector<double> error_bar;
  double half_width = 0.0;
  std::size_t grid_size = 0;
  /// some target lies beyond half the window
  bool accuracy_warning = false;
  /// |f(0.9 X)| exceeded ten times the decay-model prediction from f(0.45 X)
  bool decay_inconsistent = false;
  bool periodic_route = false;
};

/// u(xi) = (1/pi) P-integral of v(x)/(x - xi) over the line.
TransformResult hilbert_line(const RealLineFunction& v, const std::vector<double>& targets);
/// v(x) = (-1/pi) P-integral of u(xi)/(xi - x).
TransformResult hilbert_line_inverse(const RealLineFunction& u, const std::vector<double>& targets);
/// Complementary transform, the negation of hilbert_line.
TransformResult hilbert_complementary(const RealLineFunction& V, const std::vector<double>& targets);
TransformResult hilbert_complementary_inverse(const RealLineFunction& U,
                                              const std::vector<double>& targets);

/// H[v] as a function that can itself be transformed. Window quadrature data
/// is shared between calls. The result carries decay 1.
RealLineFunction hilbert_line_function(const RealLineFunction& v);

/// Samples on theta_j = -pi + 2 pi j / n. The constant mode is annihilated by
/// every circular transform; its value is kept in carried_mean.
struct PeriodicFunction {
  std::vector<double> samples;
  double carried_mean = 0.0;

  static PeriodicFunction from(const std::function<double(double)>& f, std::size_t n);
  static double angle(std::size_t j, std::size_t n);
  double mean() const;
  std::size_t size() const { return samples.size(); }
};

/// u(theta) = (1/2 pi) P-integral of v(phi) cot((phi - theta)/2).
PeriodicFunction hilbert_circular(const PeriodicFunction& v);
PeriodicFunction hilbert_circular_inverse(const PeriodicFunction& u);
PeriodicFunction hilbert_circular_complementary(const PeriodicFunction& V);
PeriodicFunction hilbert_circular_complementary_inverse(const PeriodicFunction& U);

struct NormalizationCheck {
  complex integral;
  bool normalized = false;
};

/// Integral over theta of f(e^{i theta}) from equispaced samples.
NormalizationCheck normalization_check(const std::vector<complex>& samples, double tol = 1e-10);

struct ParsevalCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

ParsevalCheck parseval_circle(const PeriodicFunction& u, const PeriodicFunction& v);
ParsevalCheck parseval_line(const RealLineFunction& u, const RealLineFunction& v);

}  // namespace cauchy
