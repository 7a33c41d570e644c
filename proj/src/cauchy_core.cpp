#include "cauchy/cauchy_core.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "cauchy/spectral.hpp"

namespace cauchy {

namespace {

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

// f^(k) as a function of the contour parameter, with its values at the nodes.
struct Derived {
  ParamFunction eval;
  std::vector<complex> nodes;
};

Derived derived(const BoundaryFunction& f, const ClosedContour& contour, const QuadratureGrid& grid,
                int k) {
  if (k < 0) throw Error(ErrorCode::ContractViolation, "derivative order must be non-negative");
  if (k > f.smoothness()) {
    throw Error(ErrorCode::CapabilityError,
                "order " + std::to_string(k) + " exceeds declared smoothness " + std::to_string(f.smoothness()));
  }
  Derived d;
  const std::size_t n = grid.size();
  d.nodes.resize(n);
  if (f.has_derivative(k)) {
    d.eval = [&f, &contour, k](double s) { return f.derivative(k, contour.z(s)); };
    for (std::size_t j = 0; j < n; ++j) d.nodes[j] = d.eval(grid.nodes[j]);
    return d;
  }
  if (!f.spectral_fallback() || grid.kind != RuleKind::PeriodicTrapezoid) {
    throw Error(ErrorCode::CapabilityError,
                "derivative of order " + std::to_string(k) + " not supplied and spectral fallback unavailable");
  }
  std::vector<complex> vals(n), dz(n);
  for (std::size_t j = 0; j < n; ++j) {
    vals[j] = f(contour.z(grid.nodes[j]));
    dz[j] = contour.dz(grid.nodes[j]);
  }
  d.nodes = contour_derivative(vals, dz, k);
  TrigInterpolant interp(d.nodes);
  d.eval = [interp](double s) { return interp(s); };
  return d;
}

std::optional<complex> next_derivative(const BoundaryFunction& f, int k, complex t) {
  if (f.has_derivative(k + 1) && k + 1 <= f.smoothness()) return f.derivative(k + 1, t);
  return std::nullopt;
}

double on_contour_parameter(const ClosedContour& contour, const QuadratureGrid& grid, complex t0) {
  if (!is_finite(t0)) throw Error(ErrorCode::InvalidPoint, "boundary point is not finite");
  const auto [s0, d] = nearest_parameter(contour, grid, t0);
  if (!(d < default_delta(contour, grid))) {
    throw Error(ErrorCode::DomainError, "boundary point is not on the contour");
  }
  return s0;
}

complex pv_of(const BoundaryFunction& f, const Derived& d, const ClosedContour& contour,
              const QuadratureGrid& grid, double s0, int k) {
  const auto dg = next_derivative(f, k, contour.z(s0));
  return pv_parametric(d.eval, contour, grid, s0, dg ? &*dg : nullptr).value;
}

// (order!/2 pi i) sum g_j / (t_j - z)^{order+1} z'_j w_j
complex kernel_sum(const std::vector<complex>& g, const ClosedContour& contour,
                   const QuadratureGrid& grid, complex z, int order) {
  complex acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double s = grid.nodes[j];
    acc += g[j] / std::pow(contour.z(s) - z, order + 1) * contour.dz(s) * grid.weights[j];
  }
  const complex v = factorial(order) * acc / (2.0 * pi * I);
  if (!is_finite(v)) throw Error(ErrorCode::NonFiniteResult, "functional is not finite");
  return v;
}

PointClassification off_contour(const ClosedContour& contour, const QuadratureGrid& grid, complex z) {
  const PointClassification pc = classify_point(contour, grid, z);
  if (pc.verdict == Verdict::OnContour) {
    throw Error(ErrorCode::OnContour, "target lies on the contour; use the boundary-value form");
  }
  return pc;
}

void require_decay(const BoundaryFunction& F, double minimum) {
  if (!F.decay_exponent() || *F.decay_exponent() < minimum) {
    throw Error(ErrorCode::ContractViolation,
                "complement density must decay at least like |z|^-" + std::to_string(static_cast<int>(minimum)));
  }
}

}  // namespace

FunctionalValue generalized_functional(const BoundaryFunction& f, const ClosedContour& contour,
                                       const QuadratureGrid& grid, complex z, int n, int m) {
  if (n < 0 || m < 0 || m > n) throw Error(ErrorCode::ContractViolation, "orders must satisfy 0 <= m <= n");
  const PointClassification pc = off_contour(contour, grid, z);
  const Derived d = derived(f, contour, grid, m);
  FunctionalValue fv;
  if (pc.near_zone && n == m) {
    // Subtract the linear Taylor part at the nearest contour point; the remainder vanishes
    // to second order where the kernel peaks.
    const double sn = pc.nearest_parameter;
    const double ds = 1e-4;
    const complex tn = contour.z(sn);
    const complex h0 = d.eval(sn);
    const complex h1 = (d.eval(sn + ds) - d.eval(sn - ds)) / (2.0 * ds) / contour.dz(sn);
    std::vector<complex> diff(d.nodes);
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= h0 + h1 * (contour.z(grid.nodes[j]) - tn);
    fv.value = kernel_sum(diff, contour, grid, z, 0) + static_cast<double>(pc.winding) * (h0 + h1 * (z - tn));
  } else {
    fv.value = kernel_sum(d.nodes, contour, grid, z, n - m);
  }
  fv.z = z;
  fv.region = pc.verdict;
  fv.n = n;
  fv.m = m;
  fv.ill_conditioned = pc.near_zone;
  return fv;
}

FunctionalValue cauchy_functional(const BoundaryFunction& f, const ClosedContour& contour,
                                  const QuadratureGrid& grid, complex z, int n) {
  if (n < 0) throw Error(ErrorCode::ContractViolation, "order must be non-negative");
  if (n > f.smoothness()) throw Error(ErrorCode::CapabilityError, "order exceeds declared smoothness");
  const PointClassification pc = off_contour(contour, grid, z);
  if (pc.near_zone) {
    FunctionalValue fv = generalized_functional(f, contour, grid, z, n, n);
    fv.m = 0;
    return fv;
  }
  const Derived d = derived(f, contour, grid, 0);
  FunctionalValue fv;
  fv.value = kernel_sum(d.nodes, contour, grid, z, n);
  fv.z = z;
  fv.region = pc.verdict;
  fv.n = n;
  fv.ill_conditioned = pc.near_zone;
  return fv;
}

complex boundary_value(const BoundaryFunction& f, const ClosedContour& contour,
                       const QuadratureGrid& grid, complex t0, int n) {
  const double s0 = on_contour_parameter(contour, grid, t0);
  const Derived d = derived(f, contour, grid, n);
  return pv_of(f, d, contour, grid, s0, n) / (pi * I);
}

complex one_sided_limit(const BoundaryFunction& f, const ClosedContour& contour,
                        const QuadratureGrid& grid, complex t0, Side side) {
  const double s0 = on_contour_parameter(contour, grid, t0);
  const Derived d = derived(f, contour, grid, 0);
  const complex pv = pv_of(f, d, contour, grid, s0, 0) / (2.0 * pi * I);
  const complex half = 0.5 * d.eval(s0);
  return side == Side::Plus ? pv + half : pv - half;
}

FunctionalValue complement_functional(const BoundaryFunction& F, const ClosedContour& contour,
                                      const QuadratureGrid& grid, complex z, int n) {
  require_decay(F, 2.0);
  const PointClassification pc = off_contour(contour, grid, z);
  const Derived d = derived(F, contour, grid, n);
  FunctionalValue fv;
  fv.value = -kernel_sum(d.nodes, contour, grid, z, 0);
  fv.z = z;
  fv.region = pc.verdict;
  fv.n = n;
  fv.m = n;
  fv.ill_conditioned = pc.near_zone;
  return fv;
}

complex complement_boundary_value(const BoundaryFunction& F, const ClosedContour& contour,
                                  const QuadratureGrid& grid, complex t0, int n) {
  require_decay(F, 1.0);
  const double s0 = on_contour_parameter(contour, grid, t0);
  const Derived d = derived(F, contour, grid, n);
  return -pv_of(F, d, contour, grid, s0, n) / (pi * I);
}

ResidualReport uniform_convergence_residuals(const BoundaryFunction& f,
                                             const ClosedContour& contour,
                                             const QuadratureGrid& grid,
                                             const std::vector<complex>& targets, int n) {
  ResidualReport rep;
  const Derived d = derived(f, contour, grid, n);
  const double delta = default_delta(contour, grid);
  for (const complex z : targets) {
    const PointClassification pc = classify_point(contour, grid, z, delta);
    if (pc.verdict == Verdict::OnContour) {
      ++rep.on_contour;
      const double s0 = pc.nearest_parameter;
      const complex pv = pv_of(f, d, contour, grid, s0, n) / (2.0 * pi * I);
      const complex fn = d.eval(s0);
      rep.max_interior = std::max(rep.max_interior, std::abs(pv + 0.5 * fn - fn));
      rep.max_exterior = std::max(rep.max_exterior, std::abs(pv - 0.5 * fn));
      continue;
    }
    const FunctionalValue J = cauchy_functional(f, contour, grid, z, n);
    if (pc.near_zone) ++rep.near_zone;
    if (pc.verdict == Verdict::Inside) {
      ++rep.inside;
      if (!f.has_derivative(n)) {
        ++rep.skipped;
        continue;
      }
      const double r = std::abs(J.value - f.derivative(n, z));
      double& slot = pc.near_zone ? rep.max_interior_near : rep.max_interior;
      slot = std::max(slot, r);
    } else {
      ++rep.outside;
      double& slot = pc.near_zone ? rep.max_exterior_near : rep.max_exterior;
      slot = std::max(slot, std::abs(J.value));
    }
  }
  return rep;
}

complex vanishing_contour_integral(const BoundaryFunction& f, const ClosedContour& contour,
                                   const QuadratureGrid& grid, int n, DensityKind kind) {
  if (kind == DensityKind::Complement) require_decay(f, 2.0);
  const Derived d = derived(f, contour, grid, n);
  const double sign = kind == DensityKind::Cauchy ? 1.0 : -1.0;
  complex acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double s = grid.nodes[j];
    const complex K = sign * pv_of(f, d, contour, grid, s, n) / (pi * I);
    acc += K * contour.dz(s) * grid.weights[j];
  }
  return acc;
}

MeanValueCheck mean_value_check(const BoundaryFunction& f, complex z, double r, int n,
                                std::size_t N) {
  if (!(r > 0.0) || N == 0) throw Error(ErrorCode::ContractViolation, "mean value circle needs r > 0 and N > 0");
  MeanValueCheck mv;
  mv.lhs = f.derivative(n, z);
  complex acc = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    const double th = 2.0 * pi * static_cast<double>(j) / static_cast<double>(N);
    acc += f.derivative(n, z + r * std::polar(1.0, th));
  }
  mv.rhs = acc / static_cast<double>(N);
  mv.gap = std::abs(mv.lhs - mv.rhs);
  return mv;
}

BoundCheck derivative_bound_check(const BoundaryFunction& f, complex z, double R, int n, int m,
                                  std::size_t N) {
  if (!(R > 0.0) || m < 0 || m > n || N == 0) {
    throw Error(ErrorCode::ContractViolation, "bound check needs R > 0 and 0 <= m <= n");
  }
  auto mod = [&](double th) { return std::abs(f.derivative(m, z + R * std::polar(1.0, th))); };
  const double h = 2.0 * pi / static_cast<double>(N);
  double best = -1.0;
  double th_best = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    const double th = h * static_cast<double>(j);
    const double v = mod(th);
    if (v > best) {
      best = v;
      th_best = th;
    }
  }
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = th_best - h, b = th_best + h;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = mod(c), fd = mod(d);
  for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
    if (fc > fd) {
      b = d; d = c; fd = fc; c = b - phi * (b - a); fc = mod(c);
    } else {
      a = c; c = d; fc = fd; d = a + phi * (b - a); fd = mod(d);
    }
  }
  BoundCheck bc;
  bc.max_modulus = std::max({best, fc, fd});
  bc.bound = factorial(n - m) * std::pow(R, -(n - m)) * bc.max_modulus;
  bc.actual = std::abs(f.derivative(n, z));
  bc.satisfied = bc.actual <= bc.bound * (1.0 + 1e-12);
  return bc;
}

}  // namespace cauchy
