#include "cauchy/plemelj.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cauchy {

namespace {

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

double arc_delta(double length) { return 1e-8 * length; }

complex fd_param(const std::function<complex(double)>& g, double s, double h) {
  return (-g(s + 2 * h) + 8.0 * g(s + h) - 8.0 * g(s - h) + g(s - 2 * h)) / (12.0 * h);
}

// P-integral over [a, b] of h(x)/(x - x0) on a real interval.
complex pv_interval(const std::function<complex(double)>& h, const QuadratureGrid& grid, double a,
                    double b, double x0) {
  const complex h0 = h(x0);
  complex acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double d = grid.nodes[j] - x0;
    if (std::abs(d) < 1e-12 * (b - a)) {
      const double step = 1e-4 * std::min(x0 - a, b - x0);
      acc += fd_param(h, x0, step) * grid.weights[j];
    } else {
      acc += (h(grid.nodes[j]) - h0) / d * grid.weights[j];
    }
  }
  return acc + h0 * std::log((b - x0) / (x0 - a));
}

// Graded Gauss–Legendre grid on [a, b] split at x0.
QuadratureGrid split_graded(double a, double b, double x0, std::size_t levels, std::size_t order) {
  QuadratureGrid left = graded_panels(a, x0, levels, order);
  const QuadratureGrid right = graded_panels(x0, b, levels, order);
  left.nodes.insert(left.nodes.end(), right.nodes.begin(), right.nodes.end());
  left.weights.insert(left.weights.end(), right.weights.begin(), right.weights.end());
  left.upper = b;
  return left;
}

struct PbLevel {
  complex lhs;
  complex rhs;
};

PbLevel pb_level(const TwoVariableDensity& f2, double a, double b, double x0, std::size_t levels,
                 std::size_t order, std::size_t inner_panels) {
  const QuadratureGrid outer = split_graded(a, b, x0, levels, order);
  const QuadratureGrid inner = gauss_legendre_panels(a, b, inner_panels, order);
  // inner P-integral over t of f2(t, tp)/(t - tp)
  auto I = [&](double tp) {
    return pv_interval([&](double t) { return f2(t, tp); }, inner, a, b, tp);
  };
  // lhs: outer P-integral over tp of I(tp)/(tp - x0)
  const complex I0 = I(x0);
  complex lhs = 0.0;
  for (std::size_t j = 0; j < outer.size(); ++j) {
    const double tp = outer.nodes[j];
    lhs += (I(tp) - I0) / (tp - x0) * outer.weights[j];
  }
  lhs += I0 * std::log((b - x0) / (x0 - a));
  // rhs via 1/((tp - x0)(t - tp)) = (1/(t - x0)) (1/(tp - x0) + 1/(t - tp))
  complex rhs = 0.0;
  for (std::size_t j = 0; j < outer.size(); ++j) {
    const double t = outer.nodes[j];
    auto row = [&](double tp) { return f2(t, tp); };
    const complex A = pv_interval(row, inner, a, b, x0);
    const complex B = pv_interval(row, inner, a, b, t);
    rhs += (A - B) / (t - x0) * outer.weights[j];
  }
  rhs -= pi * pi * f2(x0, x0);
  return {lhs, rhs};
}

}  // namespace

JordanArc::JordanArc(Map z, Map dz, bool straight) : z_(std::move(z)), dz_(std::move(dz)), straight_(straight) {
  if (std::abs(z_(0.0) - z_(1.0)) == 0.0) throw Error(ErrorCode::InvalidGrid, "arc endpoints coincide");
}

JordanArc JordanArc::segment(complex a, complex b) {
  return JordanArc([=](double s) { return a + s * (b - a); }, [=](double) { return b - a; }, true);
}

JordanArc JordanArc::circular(complex center, double radius, double theta0, double theta1) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidGrid, "arc radius must be positive");
  if (std::abs(theta1 - theta0) >= 2.0 * pi) throw Error(ErrorCode::InvalidGrid, "circular arc must be open");
  const double span = theta1 - theta0;
  return JordanArc([=](double s) { return center + radius * std::polar(1.0, theta0 + s * span); },
                   [=](double s) { return I * radius * span * std::polar(1.0, theta0 + s * span); },
                   false);
}

JordanArc JordanArc::generic(Map z, Map dz) {
  if (!z || !dz) throw Error(ErrorCode::InvalidGrid, "generic arc needs z(s) and z'(s)");
  return JordanArc(std::move(z), std::move(dz), false);
}

double JordanArc::length(const QuadratureGrid& grid) const {
  double len = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) len += std::abs(dz_(grid.nodes[j])) * grid.weights[j];
  return len;
}

double JordanArc::length_to(double s) const {
  if (s <= 0.0) return 0.0;
  return length(mapped(gauss_legendre(32), 0.0, s));
}

QuadratureGrid arc_grid(std::size_t panels, std::size_t order) {
  return gauss_legendre_panels(0.0, 1.0, panels, order);
}

std::pair<double, double> arc_nearest(const JordanArc& arc, const QuadratureGrid& grid, complex z) {
  std::vector<double> cand = grid.nodes;
  cand.push_back(0.0);
  cand.push_back(1.0);
  std::sort(cand.begin(), cand.end());
  std::size_t best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cand.size(); ++j) {
    const double d = std::abs(arc.z(cand[j]) - z);
    if (d < bd) {
      bd = d;
      best = j;
    }
  }
  auto dist = [&](double s) { return std::abs(arc.z(s) - z); };
  double a = cand[best > 0 ? best - 1 : 0];
  double b = cand[std::min(best + 1, cand.size() - 1)];
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = dist(c), fd = dist(d);
  for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
    if (fc < fd) {
      b = d; d = c; fd = fc; c = b - phi * (b - a); fc = dist(c);
    } else {
      a = c; c = d; fc = fd; d = a + phi * (b - a); fd = dist(d);
    }
  }
  double s = 0.5 * (a + b);
  for (int it = 0; it < 4; ++it) {
    const double step = std::real((arc.z(s) - z) / arc.dz(s));
    if (!std::isfinite(step) || std::abs(step) > 0.1) break;
    s = std::clamp(s - step, 0.0, 1.0);
  }
  if (dist(cand[best]) < dist(s)) s = cand[best];
  return {s, dist(s)};
}

ArcValue arc_cauchy_integral(const BoundaryFunction& g, const JordanArc& arc,
                             const QuadratureGrid& grid, complex z, int n) {
  if (!is_finite(z)) throw Error(ErrorCode::InvalidPoint, "target point is not finite");
  if (n < 0) throw Error(ErrorCode::ContractViolation, "order must be non-negative");
  const double len = arc.length(grid);
  const auto [s, d] = arc_nearest(arc, grid, z);
  (void)s;
  if (d < arc_delta(len)) throw Error(ErrorCode::OnContour, "target lies on the arc; use plemelj_limits");
  ArcValue v;
  v.ill_conditioned = d < 10.0 * len / static_cast<double>(grid.size());
  complex acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double sj = grid.nodes[j];
    const complex t = arc.z(sj);
    acc += g(t) / std::pow(t - z, n + 1) * arc.dz(sj) * grid.weights[j];
  }
  v.value = factorial(n) * acc / (2.0 * pi * I);
  if (!is_finite(v.value)) throw Error(ErrorCode::NonFiniteResult, "arc integral is not finite");
  return v;
}

complex arc_principal_value(const BoundaryFunction& g, const JordanArc& arc,
                            const QuadratureGrid& grid, complex z0, double margin) {
  if (!is_finite(z0)) throw Error(ErrorCode::InvalidPoint, "arc point is not finite");
  const double len = arc.length(grid);
  const auto [s0, d] = arc_nearest(arc, grid, z0);
  if (!(d < arc_delta(len))) throw Error(ErrorCode::DomainError, "principal value point is not on the arc");
  const double before = arc.length_to(s0);
  if (before < margin * len || len - before < margin * len) {
    throw Error(ErrorCode::EndpointSingularity, "point lies within the endpoint margin of the arc");
  }
  const complex t0 = arc.z(s0);
  const complex tau = arc.dz(s0);
  const complex g0 = g(t0);
  auto gs = [&](double s) { return g(arc.z(s)); };
  complex acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double sj = grid.nodes[j];
    const complex dzj = arc.dz(sj);
    if (std::abs(sj - s0) < 1e-10) {
      const complex dg = g.has_derivative(1) ? g.derivative(1, t0) : fd_param(gs, s0, 1e-4 * std::min(s0, 1.0 - s0)) / tau;
      acc += dg * dzj * grid.weights[j];
    } else {
      acc += (gs(sj) - g0) / (arc.z(sj) - t0) * dzj * grid.weights[j];
    }
  }
  const complex a = arc.a(), b = arc.b();
  const complex log_term = std::log(std::abs(b - t0)) - std::log(std::abs(a - t0)) +
                           I * (std::arg((b - t0) / tau) - std::arg((t0 - a) / tau));
  const complex v = acc + g0 * log_term;
  if (!is_finite(v)) throw Error(ErrorCode::NonFiniteResult, "arc principal value is not finite");
  return v;
}

std::pair<SidedLimit, SidedLimit> plemelj_limits(const BoundaryFunction& g, const JordanArc& arc,
                                                 const QuadratureGrid& grid, complex z0, double margin) {
  const complex pv = arc_principal_value(g, arc, grid, z0, margin) / (2.0 * pi * I);
  const auto [s0, d] = arc_nearest(arc, grid, z0);
  (void)d;
  const complex t0 = arc.z(s0);
  const complex half = 0.5 * g(t0);
  return {SidedLimit{pv + half, Side::Plus, t0}, SidedLimit{pv - half, Side::Minus, t0}};
}

ArcValue reconstruct_from_jump(const BoundaryFunction& jump, const JordanArc& arc,
                               const QuadratureGrid& grid, complex z) {
  return arc_cauchy_integral(jump, arc, grid, z, 0);
}

PoincareBertrandReport poincare_bertrand_residual(const TwoVariableDensity& f2, double a, double b,
                                                  double x0, double tol) {
  if (!(a < x0 && x0 < b)) throw Error(ErrorCode::DomainError, "x0 must lie inside the interval");
  const PbLevel coarse = pb_level(f2, a, b, x0, 14, 12, 8);
  const PbLevel fine = pb_level(f2, a, b, x0, 24, 16, 12);
  PoincareBertrandReport r;
  r.lhs = fine.lhs;
  r.rhs = fine.rhs;
  r.residual = std::abs(fine.lhs - fine.rhs);
  r.coarse_residual = std::abs(coarse.lhs - coarse.rhs);
  const double drift = std::max(std::abs(fine.lhs - coarse.lhs), std::abs(fine.rhs - coarse.rhs));
  r.slow_convergence = drift > 10.0 * tol;
  return r;
}

}  // namespace cauchy
