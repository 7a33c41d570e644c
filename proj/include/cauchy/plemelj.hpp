#pragma once

#include <functional>
#include <utility>

#include "cauchy/boundary_function.hpp"
#include "cauchy/quadrature.hpp"

namespace cauchy {

/// Open smooth arc z(s), s in [0, 1], from a = z(0) to b = z(1).
class JordanArc {
 public:
  using Map = std::function<complex(double)>;

  static JordanArc segment(complex a, complex b);
  static JordanArc circular(complex center, double radius, double theta0, double theta1);
  static JordanArc generic(Map z, Map dz);

  complex z(double s) const { return z_(s); }
  complex dz(double s) const { return dz_(s); }
  complex a() const { return z_(0.0); }
  complex b() const { return z_(1.0); }
  bool straight() const { return straight_; }

  double length(const QuadratureGrid& grid) const;
  /// arc length from a to z(s)
  double length_to(double s) const;

 private:
  JordanArc(Map z, Map dz, bool straight);
  Map z_;
  Map dz_;
  bool straight_;
};

/// Composite Gauss–Legendre grid on [0, 1]; 16 panels of order 16 by default.
QuadratureGrid arc_grid(std::size_t panels = 16, std::size_t order = 16);

/// Parameter of the nearest arc point and its distance.
std::pair<double, double> arc_nearest(const JordanArc& arc, const QuadratureGrid& grid, complex z);

struct ArcValue {
  complex value;
  bool ill_conditioned = false;
};

/// (n!/2 pi i) times the arc integral of g(t)/(t - z)^{n+1}.
ArcValue arc_cauchy_integral(const BoundaryFunction& g, const JordanArc& arc,
                             const QuadratureGrid& grid, complex z, int n = 0);

/// P-integral over the arc of g(t)/(t - z0) by subtraction of the exact
/// endpoint logarithm.
complex arc_principal_value(const BoundaryFunction& g, const JordanArc& arc,
                            const QuadratureGrid& grid, complex z0, double margin = 0.02);

struct SidedLimit {
  complex value;
  Side side = Side::Plus;
  complex location;
};

/// Limits from the left (Plus) and right (Minus) of the traversal direction.
std::pair<SidedLimit, SidedLimit> plemelj_limits(const BoundaryFunction& g, const JordanArc& arc,
                                                 const QuadratureGrid& grid, complex z0,
                                                 double margin = 0.02);

/// (1/2 pi i) times the arc integral of jump(t)/(t - z).
ArcValue reconstruct_from_jump(const BoundaryFunction& jump, const JordanArc& arc,
                               const QuadratureGrid& grid, complex z);

using TwoVariableDensity = std::function<complex(double t, double tp)>;

struct PoincareBertrandReport {
  complex lhs;
  complex rhs;
  double residual = 0.0;
  /// residual on the coarser of the two grid levels
  double coarse_residual = 0.0;
  bool slow_convergence = false;
};

/// Compares the two orders of nested principal-value integration of
/// f2(t, t') over the real interval [a, b] around x0.
PoincareBertrandReport poincare_bertrand_residual(const TwoVariableDensity& f2, double a, double b,
                                                  double x0, double tol = 1e-5);

}  // namespace cauchy
