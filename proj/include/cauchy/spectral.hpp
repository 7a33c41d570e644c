#pragma once

#include <vector>

#include "cauchy/types.hpp"

namespace cauchy {

/// Unnormalized forward DFT: X_k = sum_j x_j exp(-2 pi i j k / N).
std::vector<complex> dft(const std::vector<complex>& x);

/// Inverse of dft, including the 1/N factor.
std::vector<complex> idft(const std::vector<complex>& X);

/// Derivative of the trigonometric interpolant of equispaced samples of a
/// function with the given period. The Nyquist mode is dropped for odd
/// orders and coefficients below 1e-14 of the largest are zeroed before
/// differentiation.
std::vector<complex> periodic_derivative(const std::vector<complex>& samples, int order,
                                         double period = 2.0 * pi);
std::vector<double> periodic_derivative(const std::vector<double>& samples, int order,
                                        double period = 2.0 * pi);

/// Samples of d^order f / dt^order on a closed contour, given samples of f
/// and of z'(s) at equispaced parameters.
std::vector<complex> contour_derivative(const std::vector<complex>& f,
                                        const std::vector<complex>& dz, int order);

/// Trigonometric interpolant through equispaced samples on [lower, lower + period).
class TrigInterpolant {
 public:
  TrigInterpolant() = default;
  TrigInterpolant(const std::vector<complex>& samples, double lower = 0.0,
                  double period = 2.0 * pi);

  complex operator()(double s) const;
  std::size_t size() const { return coeffs_.size(); }

 private:
  std::vector<complex> coeffs_;
  double lower_ = 0.0;
  double period_ = 2.0 * pi;
};

}  // namespace cauchy
