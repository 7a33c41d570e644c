#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cauchy/quadrature.hpp"
#include "cauchy/types.hpp"

namespace cauchy {

struct FlowConfig {
  double speed = 1.0;      // U
  double incidence = 0.0;  // alpha, radians
  double density = 1.0;    // rho

  /// Throws DomainError unless U > 0, rho > 0 and |alpha| < pi/2.
  void validate() const;
};

using ChordFunction = std::function<double(double)>;

/// sqrt((1 - x)/(1 + x)), singular at the leading edge x = -1.
double leading_weight(double x);
/// sqrt((1 + x)/(1 - x)), singular at the trailing edge x = 1.
double trailing_weight(double x);

/// gamma(x) = leading_weight(x) * weighted(x) + remainder(x) on (-1, 1).
struct SheetDensity {
  ChordFunction weighted;
  ChordFunction remainder;
  bool accuracy_warning = false;

  static SheetDensity from_weighted(ChordFunction a);
  static SheetDensity from_smooth(ChordFunction r);
  double operator()(double x) const;
};

/// v(x) = (1/2 pi) P-integral over the chord of gamma(t)/(t - x).
std::vector<double> finite_hilbert_transform(const SheetDensity& gamma,
                                             const std::vector<double>& targets,
                                             std::size_t n = 128);

/// The inverse with the Kutta condition gamma(1) = 0 built in.
SheetDensity finite_hilbert_inverse(const ChordFunction& v, std::size_t n = 128);

/// w = u - i v from the integral representation with downwash -U sin(alpha).
complex flat_plate_complex_velocity(const FlowConfig& cfg, complex z, std::size_t n = 128);
/// Closed form -i U sin(alpha) (R(z) - 1), R = sqrt((z - 1)/(z + 1)).
complex flat_plate_closed_form(const FlowConfig& cfg, complex z);
/// sqrt((z - 1)/(z + 1)) on the branch cut along the plate with value 1 at infinity.
complex plate_root(complex z);
/// sqrt(z^2 - 1) with value i sqrt(1 - x^2) on the upper side of the plate.
complex plate_branch_factor(complex z);

struct SurfaceVelocity {
  double u = 0.0;
  double v = 0.0;
};

SurfaceVelocity surface_velocities(const FlowConfig& cfg, double x, Side side);
/// The same velocities obtained as one-sided limits of the integral form.
SurfaceVelocity surface_velocities_from_limits(const FlowConfig& cfg, double x, Side side,
                                               std::size_t n = 128);

/// Integral of u+ - u- over the chord.
double circulation(const FlowConfig& cfg, std::size_t n = 128);

struct CirculationRoutes {
  double contour = 0.0;
  double sheet = 0.0;
  double far_field = 0.0;
  double spread() const;
};

CirculationRoutes circulation_routes(const FlowConfig& cfg, std::size_t n = 128);

struct Lift {
  std::array<double, 3> vector{};
  double magnitude = 0.0;
  /// |L . U| / (|L| |U|)
  double orthogonality = 0.0;
};

Lift lift(const FlowConfig& cfg, std::size_t n = 128);

/// Bernoulli pressure relative to the free stream.
double pressure(const FlowConfig& cfg, double x, Side side);

struct ForceBalance {
  double normal_force = 0.0;
  double lift_magnitude = 0.0;
  /// |L| cos(alpha)
  double expected_normal = 0.0;
  /// sqrt(|L|^2 - normal^2), the leading-edge suction
  double suction = 0.0;
};

ForceBalance force_balance(const FlowConfig& cfg, std::size_t n = 128);

struct FieldValue {
  complex value;
  bool ill_conditioned = false;
};

/// (1/2 pi) times the chord integral of (q + i gamma)/(z - t).
FieldValue sheet_velocity_field(const ChordFunction& q, const ChordFunction& gamma,
                                const QuadratureGrid& grid, complex z);

/// Normalized Gaussian of the given strength and width and a grid that resolves it.
ChordFunction gaussian_bump(double strength, double center, double sigma);
QuadratureGrid bump_grid(double center, double sigma);

enum class Edge { Leading, Trailing };

/// Slope of log|gamma| against log of the distance to the edge, fitted at
/// distances 1e-3 .. 1e-6.
double edge_exponent(const SheetDensity& gamma, Edge edge);

}  // namespace cauchy
