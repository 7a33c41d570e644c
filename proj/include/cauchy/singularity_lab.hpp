#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cauchy/boundary_function.hpp"
#include "cauchy/geometry.hpp"

namespace cauchy {

enum class SingularityKind { Pole, AlgebraicBranch, LogBranch, Constant };

/// An exterior singularity of the unit disk. Branch kinds take their cut
/// along the ray location + r * cut_direction, r >= 0; the default direction
/// points radially outward.
struct SingularityPrescription {
  SingularityKind kind = SingularityKind::Pole;
  complex location{2.0, 0.0};
  complex strength{1.0, 0.0};
  int order = 1;
  double exponent = -0.5;
  std::optional<complex> cut_direction;

  static SingularityPrescription pole(complex a, int order = 1, complex strength = 1.0);
  static SingularityPrescription algebraic(complex c, double exponent, complex strength = 1.0);
  static SingularityPrescription logarithmic(complex c, complex strength = 1.0);
  static SingularityPrescription constant(complex value);

  /// Throws PrescriptionError for interior locations or cuts that meet the disk.
  void validate(double margin = 1e-6) const;
};

/// Closed-form density with analytic derivatives up to order 4.
BoundaryFunction catalog_function(const SingularityPrescription& p);

/// max |J_n[f](z)| over the targets and orders 0..n_max. Targets must be exterior.
double exterior_annihilation_check(const SingularityPrescription& p, const ClosedContour& contour,
                                   const QuadratureGrid& grid, const std::vector<complex>& targets,
                                   int n_max = 0);

/// max |J_n[f](z) - f^(n)(z)| over interior targets and orders 0..n_max.
double interior_reproduction_check(const SingularityPrescription& p, const ClosedContour& contour,
                                   const QuadratureGrid& grid, const std::vector<complex>& targets,
                                   int n_max = 0);

struct TaylorCoefficients {
  std::vector<complex> c;
  /// largest |c_-k|, which vanishes when f is regular inside the circle
  double negative_mode = 0.0;
  bool interior_singularity = false;
};

/// c_n from samples f(e^{i theta_j}), theta_j = theta0 + 2 pi j / N.
TaylorCoefficients taylor_coefficients(const std::vector<complex>& samples, std::size_t n_max,
                                       double theta0 = 0.0);

struct RadiusEstimate {
  double radius = 0.0;
  double rate = 0.0;
  double log_exponent = 0.0;
};

/// Fit log|c_n| = a + b n + e ln n over n in [n_lo, n_hi]; radius = exp(-b).
RadiusEstimate singularity_radius_estimate(const std::vector<complex>& c, std::size_t n_lo = 10,
                                           std::size_t n_hi = 40);

struct ProbeReport {
  std::vector<complex> locations;
  std::vector<complex> strengths;
  /// roots of the denominator inside the disk or removed as spurious
  std::vector<complex> discarded_roots;
  std::vector<complex> coefficients;
  /// P and Q in ascending powers, Q(0) = 1
  std::vector<complex> numerator;
  std::vector<complex> denominator;
  int m = 0;
  int k = 0;
  double coefficient_residual = 0.0;
  double boundary_residual = -1.0;
  double singular_value_ratio = 0.0;
  bool low_confidence = false;
  /// residual small and poles stable under a degree increase
  bool asserted = false;
  std::vector<std::pair<int, double>> scan;
  std::vector<std::string> notes;
};

/// Rational (m/k) approximant from Taylor coefficients.
ProbeReport pade_pole_probe(const std::vector<complex>& coefficients, int m, int k);

/// Full probe from equispaced boundary samples on theta_j = theta0 + 2 pi j / N:
/// coefficients from even samples, residual on odd samples, k scanned 1..8
/// with m = k - 1 unless degrees are given.
ProbeReport probe_boundary_samples(const std::vector<complex>& samples, double theta0 = 0.0,
                                   std::optional<std::pair<int, int>> degrees = std::nullopt,
                                   std::size_t coefficient_count = 64);

}  // namespace cauchy
