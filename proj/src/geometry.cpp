#include "cauchy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cauchy {

namespace {

double wrap(double s) {
  s = std::fmod(s, 2.0 * pi);
  return s < 0.0 ? s + 2.0 * pi : s;
}

// Signed distance between two parameters on the circle of length 2 pi.
double periodic_gap(double a, double b) {
  double d = std::fmod(a - b, 2.0 * pi);
  if (d > pi) d -= 2.0 * pi;
  if (d < -pi) d += 2.0 * pi;
  return d;
}

double cross(complex a, complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_cross(complex p1, complex p2, complex q1, complex q2) {
  const double d1 = cross(p2 - p1, q1 - p1);
  const double d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1);
  const double d4 = cross(q2 - q1, p2 - q1);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
         d4 != 0;
}

}  // namespace

ClosedContour ClosedContour::unit_circle() { return circle(0.0, 1.0); }

ClosedContour ClosedContour::circle(complex center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidGrid, "circle radius must be positive");
  ClosedContour c([=](double s) { return center + radius * std::polar(1.0, s); },
                  [=](double s) { return I * radius * std::polar(1.0, s); }, ContourShape::Circle);
  c.center_ = center;
  c.a_ = c.b_ = radius;
  return c;
}

ClosedContour ClosedContour::ellipse(complex center, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw Error(ErrorCode::InvalidGrid, "ellipse semi-axes must be positive");
  ClosedContour c([=](double s) { return center + complex(a * std::cos(s), b * std::sin(s)); },
                  [=](double s) { return complex(-a * std::sin(s), b * std::cos(s)); },
                  ContourShape::Ellipse);
  c.center_ = center;
  c.a_ = a;
  c.b_ = b;
  return c;
}

ClosedContour ClosedContour::generic(Map z, Map dz) {
  if (!z || !dz) throw Error(ErrorCode::InvalidGrid, "generic contour needs z(s) and z'(s)");
  return ClosedContour(std::move(z), std::move(dz), ContourShape::Generic);
}

ClosedContour ClosedContour::reversed() const {
  ClosedContour c = *this;
  Map z = z_;
  Map dz = dz_;
  c.z_ = [z](double s) { return z(2.0 * pi - s); };
  c.dz_ = [dz](double s) { return -dz(2.0 * pi - s); };
  c.orientation_ = -orientation_;
  return c;
}

double ClosedContour::length(const QuadratureGrid& grid) const {
  double len = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) len += std::abs(dz_(grid.nodes[j])) * grid.weights[j];
  return len;
}

void ClosedContour::validate(const QuadratureGrid& grid) const {
  const std::size_t n = grid.size();
  if (n < 3) throw Error(ErrorCode::InvalidGrid, "contour grid needs at least three nodes");
  std::vector<complex> pts(n);
  double area = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = grid.nodes[j];
    pts[j] = z_(s);
    const complex d = dz_(s);
    if (!is_finite(pts[j]) || !is_finite(d)) throw Error(ErrorCode::InvalidGrid, "non-finite contour sample");
    if (!(std::abs(d) > 0.0)) throw Error(ErrorCode::InvalidGrid, "contour derivative vanishes");
    area += 0.5 * cross(pts[j], d) * grid.weights[j];
  }
  if (area * orientation_ <= 0.0) {
    throw Error(ErrorCode::InvalidGrid, "contour orientation does not match its declared sense");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_cross(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) {
        throw Error(ErrorCode::InvalidGrid, "contour self-intersects at sample resolution");
      }
    }
  }
}

std::pair<ClosedContour, QuadratureGrid> build_unit_circle(std::size_t n) {
  if (n < 8 || n % 2 != 0) {
    throw Error(ErrorCode::InvalidGrid, "unit circle needs an even node count >= 8, got " + std::to_string(n));
  }
  return {ClosedContour::unit_circle(), periodic_trapezoid(n)};
}

ContourSamples sample(const ClosedContour& contour, const QuadratureGrid& grid) {
  ContourSamples cs;
  const std::size_t n = grid.size();
  cs.s = grid.nodes;
  cs.w = grid.weights;
  cs.z.resize(n);
  cs.dz.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    cs.z[j] = contour.z(grid.nodes[j]);
    cs.dz[j] = contour.dz(grid.nodes[j]);
    cs.length += std::abs(cs.dz[j]) * grid.weights[j];
  }
  return cs;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "inside";
    case Verdict::OnContour: return "on-contour";
    case Verdict::Outside: return "outside";
  }
  return "unknown";
}

double default_delta(const ClosedContour& contour, const QuadratureGrid& grid) {
  return 1e-8 * contour.length(grid);
}

double near_zone_width(const ClosedContour& contour, const QuadratureGrid& grid) {
  return 10.0 * contour.length(grid) / static_cast<double>(grid.size());
}

std::pair<double, double> nearest_parameter(const ClosedContour& contour,
                                            const QuadratureGrid& grid, complex z) {
  const std::size_t n = grid.size();
  std::size_t best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const double d = std::abs(contour.z(grid.nodes[j]) - z);
    if (d < bd) {
      bd = d;
      best = j;
    }
  }
  const double h = 2.0 * pi / static_cast<double>(n);
  auto dist = [&](double s) { return std::abs(contour.z(s) - z); };
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = grid.nodes[best] - h;
  double b = grid.nodes[best] + h;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = dist(c);
  double fd = dist(d);
  for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = dist(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = dist(d);
    }
  }
  double s = 0.5 * (a + b);
  // Gauss–Newton polish towards the foot of the perpendicular
  for (int it = 0; it < 4; ++it) {
    const complex dz = contour.dz(s);
    const double step = std::real((contour.z(s) - z) / dz);
    if (!std::isfinite(step) || std::abs(step) > h) break;
    s -= step;
  }
  s = wrap(s);
  return {s, dist(s)};
}

PointClassification classify_point(const ClosedContour& contour, const QuadratureGrid& grid,
                                   complex z, double delta) {
  if (!is_finite(z)) throw Error(ErrorCode::InvalidPoint, "target point is not finite");
  if (!(delta > 0.0)) throw Error(ErrorCode::ContractViolation, "tolerance band must be positive");
  PointClassification pc;
  pc.delta = delta;
  const auto [s, d] = nearest_parameter(contour, grid, z);
  pc.nearest_parameter = s;
  pc.distance = d;
  if (d < delta) {
    pc.verdict = Verdict::OnContour;
    pc.winding = 0;
    return pc;
  }
  complex acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double sj = grid.nodes[j];
    acc += contour.dz(sj) / (contour.z(sj) - z) * grid.weights[j];
  }
  pc.winding_raw = (acc / (2.0 * pi * I)).real();
  const double rounded = std::round(pc.winding_raw);
  pc.near_zone = d < near_zone_width(contour, grid);
  pc.flagged = std::abs(pc.winding_raw - rounded) > 1e-6;
  if (pc.near_zone || pc.flagged) {
    const complex foot = contour.z(s);
    const double side = cross(contour.dz(s), z - foot) * contour.orientation();
    pc.winding = side > 0.0 ? contour.orientation() : 0;
  } else {
    pc.winding = static_cast<int>(rounded);
  }
  pc.verdict = pc.winding != 0 ? Verdict::Inside : Verdict::Outside;
  return pc;
}

PointClassification classify_point(const ClosedContour& contour, const QuadratureGrid& grid,
                                   complex z) {
  return classify_point(contour, grid, z, default_delta(contour, grid));
}

complex contour_integral(const BoundaryFunction& f, const ClosedContour& contour,
                         const QuadratureGrid& grid) {
  complex acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double s = grid.nodes[j];
    const complex v = f(contour.z(s));
    if (!is_finite(v)) throw Error(ErrorCode::NonFiniteResult, "density is not finite at a grid node");
    acc += v * contour.dz(s) * grid.weights[j];
  }
  return acc;
}

complex pv_singular_weight(const ClosedContour& contour, const QuadratureGrid& grid, complex t0) {
  const auto [s, d] = nearest_parameter(contour, grid, t0);
  (void)s;
  if (!(d < default_delta(contour, grid))) {
    throw Error(ErrorCode::DomainError, "principal value point is not on the contour");
  }
  return -pi * I * static_cast<double>(contour.orientation());
}

PvResult pv_parametric(const ParamFunction& g, const ClosedContour& contour,
                       const QuadratureGrid& grid, double s0, const complex* dg) {
  PvResult r;
  r.parameter = s0;
  const complex t0 = contour.z(s0);
  const complex g0 = g(s0);
  const double hgrid = 2.0 * pi / static_cast<double>(grid.size());
  complex acc = 0.0;
  bool have_limit = dg != nullptr;
  complex limit = have_limit ? *dg : complex{};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double sj = grid.nodes[j];
    const complex dzj = contour.dz(sj);
    if (std::abs(periodic_gap(sj, s0)) < 1e-8) {
      if (!have_limit) {
        auto fd = [&](double h) {
          return (-g(s0 + 2 * h) + 8.0 * g(s0 + h) - 8.0 * g(s0 - h) + g(s0 - 2 * h)) / (12.0 * h);
        };
        const double h = std::min(hgrid / 4.0, 1e-3);
        const complex d1 = fd(h);
        const complex d2 = fd(2 * h);
        if (std::abs(d1 - d2) > 1e-6 * (1.0 + std::abs(d1))) r.accuracy_warning = true;
        limit = d1 / contour.dz(s0);
        have_limit = true;
      }
      acc += limit * dzj * grid.weights[j];
      continue;
    }
    const complex gj = g(sj);
    acc += (gj - g0) / (contour.z(sj) - t0) * dzj * grid.weights[j];
  }
  r.value = acc + g0 * pi * I * static_cast<double>(contour.orientation());
  if (!is_finite(r.value)) throw Error(ErrorCode::NonFiniteResult, "principal value is not finite");
  return r;
}

PvResult pv_contour_integral(const BoundaryFunction& f, const ClosedContour& contour,
                             const QuadratureGrid& grid, complex t0) {
  if (!is_finite(t0)) throw Error(ErrorCode::InvalidPoint, "principal value point is not finite");
  const auto [s0, d] = nearest_parameter(contour, grid, t0);
  if (!(d < default_delta(contour, grid))) {
    throw Error(ErrorCode::DomainError, "principal value point is not on the contour");
  }
  ParamFunction g = [&](double s) { return f(contour.z(s)); };
  if (f.has_derivative(1)) {
    const complex dg = f.derivative(1, contour.z(s0));
    return pv_parametric(g, contour, grid, s0, &dg);
  }
  return pv_parametric(g, contour, grid, s0);
}

}  // namespace cauchy
