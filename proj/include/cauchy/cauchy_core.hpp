#pragma once

#include <vector>

#include "cauchy/boundary_function.hpp"
#include "cauchy/geometry.hpp"

namespace cauchy {

struct FunctionalValue {
  complex value;
  complex z;
  Verdict region = Verdict::Outside;
  int n = 0;
  int m = 0;
  /// target lies in the near zone of the grid
  bool ill_conditioned = false;
};

/// (n!/2 pi i) times the contour integral of f(t)/(t-z)^{n+1}. In the near
/// zone with n >= 1 the equivalent first-order kernel applied to f^(n) is used.
FunctionalValue cauchy_functional(const BoundaryFunction& f, const ClosedContour& contour,
                                  const QuadratureGrid& grid, complex z, int n);

/// ((n-m)!/2 pi i) times the contour integral of f^(m)(t)/(t-z)^{n-m+1}.
FunctionalValue generalized_functional(const BoundaryFunction& f, const ClosedContour& contour,
                                       const QuadratureGrid& grid, complex z, int n, int m);

/// K_n at an on-contour point: (1/pi i) P-integral of f^(n)(t)/(t-t0).
complex boundary_value(const BoundaryFunction& f, const ClosedContour& contour,
                       const QuadratureGrid& grid, complex t0, int n);

/// Limit of J[f] at t0 approached from the interior (Plus) or exterior (Minus).
complex one_sided_limit(const BoundaryFunction& f, const ClosedContour& contour,
                        const QuadratureGrid& grid, complex t0, Side side);

/// (-1/2 pi i) times the contour integral of F^(n)(t)/(t-z). Requires a
/// declared decay exponent of at least 2.
FunctionalValue complement_functional(const BoundaryFunction& F, const ClosedContour& contour,
                                      const QuadratureGrid& grid, complex z, int n);

/// (-1/pi i) P-integral of F^(n)(t)/(t-t0). Requires decay of at least 1.
complex complement_boundary_value(const BoundaryFunction& F, const ClosedContour& contour,
                                  const QuadratureGrid& grid, complex t0, int n);

struct ResidualReport {
  /// max |J_n - f^(n)| over interior and on-contour targets
  double max_interior = 0.0;
  /// max |J_n| over exterior targets and exterior limits on the contour
  double max_exterior = 0.0;
  /// the same maxima restricted to near-zone targets, which are excluded above
  double max_interior_near = 0.0;
  double max_exterior_near = 0.0;
  std::size_t inside = 0;
  std::size_t on_contour = 0;
  std::size_t outside = 0;
  std::size_t near_zone = 0;
  /// interior targets skipped because f^(n) has no off-contour evaluator
  std::size_t skipped = 0;
};

ResidualReport uniform_convergence_residuals(const BoundaryFunction& f,
                                             const ClosedContour& contour,
                                             const QuadratureGrid& grid,
                                             const std::vector<complex>& targets, int n);

enum class DensityKind { Cauchy, Complement };

/// Contour integral of K_n[f] (or its complement counterpart) evaluated at
/// every node.
complex vanishing_contour_integral(const BoundaryFunction& f, const ClosedContour& contour,
                                   const QuadratureGrid& grid, int n,
                                   DensityKind kind = DensityKind::Cauchy);

struct MeanValueCheck {
  complex lhs;
  complex rhs;
  double gap = 0.0;
};

/// f^(n)(z) against its mean over the circle |t - z| = r sampled at N nodes.
MeanValueCheck mean_value_check(const BoundaryFunction& f, complex z, double r, int n,
                                std::size_t N = 256);

struct BoundCheck {
  double bound = 0.0;
  double actual = 0.0;
  double max_modulus = 0.0;
  bool satisfied = false;
};

/// bound = (n-m)! R^{-(n-m)} max |f^(m)| on |t - z| = R, actual = |f^(n)(z)|.
BoundCheck derivative_bound_check(const BoundaryFunction& f, complex z, double R, int n, int m,
                                  std::size_t N = 256);

}  // namespace cauchy
