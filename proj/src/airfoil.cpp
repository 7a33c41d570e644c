#include "cauchy/airfoil.hpp"

#include <cmath>
#include <numeric>

namespace cauchy {

namespace {

double fd(const ChordFunction& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

void check_chord_target(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidPoint, "chord position is not finite");
  if (!(x > -1.0 && x < 1.0)) throw Error(ErrorCode::EndpointSingularity, "chord target must lie strictly inside (-1, 1)");
}

// sum_k w_k (a(t_k) - a(x))/(t_k - x) for a weighted Gauss–Chebyshev grid
double weighted_difference(const ChordFunction& a, const QuadratureGrid& g, double x) {
  const double ax = a(x);
  double acc = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double d = g.nodes[k] - x;
    if (std::abs(d) < 1e-12) {
      acc += fd(a, x, 1e-4 * std::min(1.0 - x, 1.0 + x)) * g.weights[k];
    } else {
      acc += (a(g.nodes[k]) - ax) / d * g.weights[k];
    }
  }
  return acc;
}

double sin_part(const FlowConfig& cfg) { return cfg.speed * std::sin(cfg.incidence); }

}  // namespace

void FlowConfig::validate() const {
  if (!(speed > 0.0) || !std::isfinite(speed)) throw Error(ErrorCode::DomainError, "free-stream speed must be positive");
  if (!(density > 0.0) || !std::isfinite(density)) throw Error(ErrorCode::DomainError, "fluid density must be positive");
  if (!(std::abs(incidence) < 0.5 * pi)) throw Error(ErrorCode::DomainError, "incidence must satisfy |alpha| < pi/2");
}

double leading_weight(double x) { return std::sqrt((1.0 - x) / (1.0 + x)); }
double trailing_weight(double x) { return std::sqrt((1.0 + x) / (1.0 - x)); }

SheetDensity SheetDensity::from_weighted(ChordFunction a) {
  return SheetDensity{std::move(a), [](double) { return 0.0; }, false};
}

SheetDensity SheetDensity::from_smooth(ChordFunction r) {
  return SheetDensity{[](double) { return 0.0; }, std::move(r), false};
}

double SheetDensity::operator()(double x) const {
  double g = 0.0;
  if (weighted) g += x == 1.0 ? 0.0 : leading_weight(x) * weighted(x);
  if (remainder) g += remainder(x);
  return g;
}

std::vector<double> finite_hilbert_transform(const SheetDensity& gamma,
                                             const std::vector<double>& targets, std::size_t n) {
  const QuadratureGrid cheb = gauss_chebyshev(n, ChebyshevWeight::FourthKind);
  const QuadratureGrid smooth = gauss_legendre_panels(-1.0, 1.0, 8, 16);
  std::vector<double> out(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double x = targets[i];
    check_chord_target(x);
    double acc = 0.0;
    if (gamma.weighted) acc += weighted_difference(gamma.weighted, cheb, x) - pi * gamma.weighted(x);
    if (gamma.remainder) {
      acc += weighted_difference(gamma.remainder, smooth, x) + gamma.remainder(x) * std::log((1.0 - x) / (1.0 + x));
    }
    out[i] = acc / (2.0 * pi);
  }
  return out;
}

SheetDensity finite_hilbert_inverse(const ChordFunction& v, std::size_t n) {
  if (!v) throw Error(ErrorCode::ContractViolation, "inverse needs a chord function");
  const QuadratureGrid cheb = gauss_chebyshev(n, ChebyshevWeight::ThirdKind);
  auto coefficient = [v, cheb](double x) {
    if (x <= -1.0 || x > 1.0) throw Error(ErrorCode::EndpointSingularity, "sheet density requested outside (-1, 1]");
    return -(2.0 / pi) * (weighted_difference(v, cheb, x) + pi * v(x));
  };
  SheetDensity s = SheetDensity::from_weighted(coefficient);
  const QuadratureGrid half = gauss_chebyshev(n / 2, ChebyshevWeight::ThirdKind);
  for (double x : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    const double coarse = -(2.0 / pi) * (weighted_difference(v, half, x) + pi * v(x));
    if (std::abs(coarse - coefficient(x)) > 1e-8 * (1.0 + std::abs(coarse))) s.accuracy_warning = true;
  }
  return s;
}

complex plate_root(complex z) { return std::sqrt((z - 1.0) / (z + 1.0)); }

complex plate_branch_factor(complex z) { return (z + 1.0) * plate_root(z); }

complex flat_plate_closed_form(const FlowConfig& cfg, complex z) {
  cfg.validate();
  if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
    throw Error(ErrorCode::OnContour, "point lies on the plate; use surface_velocities");
  }
  return -I * sin_part(cfg) * (plate_root(z) - 1.0);
}

complex flat_plate_complex_velocity(const FlowConfig& cfg, complex z, std::size_t n) {
  cfg.validate();
  if (!is_finite(z)) throw Error(ErrorCode::InvalidPoint, "field point is not finite");
  if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
    throw Error(ErrorCode::OnContour, "point lies on the plate; use surface_velocities");
  }
  const QuadratureGrid cheb = gauss_chebyshev(n, ChebyshevWeight::ThirdKind);
  const double downwash = -sin_part(cfg);
  complex acc = 0.0;
  for (std::size_t k = 0; k < cheb.size(); ++k) acc += cheb.weights[k] * downwash / (cheb.nodes[k] - z);
  return -plate_root(z) * acc / (pi * I);
}

SurfaceVelocity surface_velocities(const FlowConfig& cfg, double x, Side side) {
  cfg.validate();
  if (!std::isfinite(x) || x < -1.0 || x > 1.0) throw Error(ErrorCode::DomainError, "chord position must lie in (-1, 1]");
  if (x == -1.0) throw Error(ErrorCode::EndpointSingularity, "velocity is infinite at the leading edge");
  const double s = sin_part(cfg);
  const double u = s * leading_weight(x);
  return {side == Side::Plus ? u : -u, -s};
}

SurfaceVelocity surface_velocities_from_limits(const FlowConfig& cfg, double x, Side side,
                                               std::size_t n) {
  cfg.validate();
  check_chord_target(x);
  const double downwash = -sin_part(cfg);
  const ChordFunction v = [downwash](double) { return downwash; };
  const QuadratureGrid cheb = gauss_chebyshev(n, ChebyshevWeight::ThirdKind);
  const double pv = weighted_difference(v, cheb, x) + pi * v(x);
  const double sign = side == Side::Plus ? 1.0 : -1.0;
  // w = -i v -/+ (W/pi) pv, and u = Re w
  return {-sign * leading_weight(x) * pv / pi, downwash};
}

double circulation(const FlowConfig& cfg, std::size_t n) {
  cfg.validate();
  const QuadratureGrid cheb = gauss_chebyshev(n, ChebyshevWeight::FourthKind);
  double acc = 0.0;
  for (std::size_t k = 0; k < cheb.size(); ++k) {
    const double x = cheb.nodes[k];
    const double jump = surface_velocities(cfg, x, Side::Plus).u - surface_velocities(cfg, x, Side::Minus).u;
    acc += cheb.weights[k] * jump / leading_weight(x);
  }
  return acc;
}

double CirculationRoutes::spread() const {
  return std::max({std::abs(contour - sheet), std::abs(contour - far_field), std::abs(sheet - far_field)});
}

CirculationRoutes circulation_routes(const FlowConfig& cfg, std::size_t n) {
  CirculationRoutes r;
  r.contour = circulation(cfg, n);
  const double downwash = -sin_part(cfg);
  const SheetDensity gamma = finite_hilbert_inverse([downwash](double) { return downwash; }, n);
  const QuadratureGrid cheb = gauss_chebyshev(n, ChebyshevWeight::FourthKind);
  for (std::size_t k = 0; k < cheb.size(); ++k) r.sheet += cheb.weights[k] * gamma.weighted(cheb.nodes[k]);
  // w ~ i Gamma / (2 pi z): Gamma = -2 pi i c1, c1 = (1/2 pi i) contour integral of w on |z| = 2
  const std::size_t m = 256;
  complex c1 = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const complex z = 2.0 * std::polar(1.0, 2.0 * pi * static_cast<double>(j) / static_cast<double>(m));
    c1 += flat_plate_complex_velocity(cfg, z, n) * I * z;
  }
  c1 *= (2.0 * pi / static_cast<double>(m)) / (2.0 * pi * I);
  r.far_field = (-2.0 * pi * I * c1).real();
  return r;
}

Lift lift(const FlowConfig& cfg, std::size_t n) {
  const double G = circulation(cfg, n);
  const double U = cfg.speed, a = cfg.incidence, rho = cfg.density;
  const std::array<double, 3> Uv{U * std::cos(a), U * std::sin(a), 0.0};
  const std::array<double, 3> Gv{0.0, 0.0, -G};
  Lift L;
  L.vector = {rho * (Uv[1] * Gv[2] - Uv[2] * Gv[1]), rho * (Uv[2] * Gv[0] - Uv[0] * Gv[2]),
              rho * (Uv[0] * Gv[1] - Uv[1] * Gv[0])};
  L.magnitude = std::hypot(L.vector[0], L.vector[1], L.vector[2]);
  const double dot = L.vector[0] * Uv[0] + L.vector[1] * Uv[1] + L.vector[2] * Uv[2];
  L.orthogonality = L.magnitude > 0.0 ? std::abs(dot) / (L.magnitude * U) : 0.0;
  return L;
}

double pressure(const FlowConfig& cfg, double x, Side side) {
  const SurfaceVelocity s = surface_velocities(cfg, x, side);
  const double U = cfg.speed;
  const double du = U * std::cos(cfg.incidence) + s.u;
  const double dv = U * std::sin(cfg.incidence) + s.v;
  return cfg.density * (0.5 * U * U - 0.5 * (du * du + dv * dv));
}

ForceBalance force_balance(const FlowConfig& cfg, std::size_t n) {
  ForceBalance fb;
  const QuadratureGrid cheb = gauss_chebyshev(n, ChebyshevWeight::FourthKind);
  for (std::size_t k = 0; k < cheb.size(); ++k) {
    const double x = cheb.nodes[k];
    const double dp = pressure(cfg, x, Side::Minus) - pressure(cfg, x, Side::Plus);
    fb.normal_force += cheb.weights[k] * dp / leading_weight(x);
  }
  fb.lift_magnitude = lift(cfg, n).magnitude;
  fb.expected_normal = fb.lift_magnitude * std::cos(cfg.incidence);
  fb.suction = std::sqrt(std::max(0.0, fb.lift_magnitude * fb.lift_magnitude - fb.normal_force * fb.normal_force));
  return fb;
}

FieldValue sheet_velocity_field(const ChordFunction& q, const ChordFunction& gamma,
                                const QuadratureGrid& grid, complex z) {
  if (!is_finite(z)) throw Error(ErrorCode::InvalidPoint, "field point is not finite");
  FieldValue fv;
  complex acc = 0.0;
  double nearest = std::abs(z.imag());
  if (z.real() < grid.lower) nearest = std::abs(z - grid.lower);
  if (z.real() > grid.upper) nearest = std::abs(z - grid.upper);
  double hmax = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid.nodes[k];
    const double qv = q ? q(t) : 0.0;
    const double gv = gamma ? gamma(t) : 0.0;
    acc += complex(qv, gv) / (z - t) * grid.weights[k];
    if (k > 0) hmax = std::max(hmax, grid.nodes[k] - grid.nodes[k - 1]);
  }
  fv.value = acc / (2.0 * pi);
  fv.ill_conditioned = nearest < 10.0 * hmax;
  if (!is_finite(fv.value)) throw Error(ErrorCode::NonFiniteResult, "sheet field is not finite");
  return fv;
}

ChordFunction gaussian_bump(double strength, double center, double sigma) {
  const double norm = strength / (sigma * std::sqrt(2.0 * pi));
  return [=](double t) {
    const double r = (t - center) / sigma;
    return norm * std::exp(-0.5 * r * r);
  };
}

QuadratureGrid bump_grid(double center, double sigma) {
  return gauss_legendre_panels(center - 12.0 * sigma, center + 12.0 * sigma, 24, 16);
}

double edge_exponent(const SheetDensity& gamma, Edge edge) {
  const std::array<double, 4> d{1e-3, 1e-4, 1e-5, 1e-6};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double di : d) {
    const double x = edge == Edge::Leading ? -1.0 + di : 1.0 - di;
    const double lx = std::log(di);
    const double ly = std::log(std::abs(gamma(x)));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(d.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace cauchy
