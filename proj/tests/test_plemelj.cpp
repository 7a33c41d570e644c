#include <doctest.h>

#include <cmath>

#include "cauchy/cauchy_core.hpp"
#include "cauchy/plemelj.hpp"
#include "oracles.hpp"

using namespace cauchy;

namespace {

const BoundaryFunction one = BoundaryFunction::constant(1.0);
const BoundaryFunction parabola([](complex t) { return 1.0 - t * t; }, {[](complex t) { return -2.0 * t; }});

}  // namespace

TEST_CASE("arc cauchy integral closed forms") {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const QuadratureGrid G = arc_grid();
  const complex z(0.0, 2.0);
  const complex exact = std::log((z - 1.0) / (z + 1.0)) / (2.0 * pi * I);
  CHECK(std::abs(arc_cauchy_integral(one, L, G, z).value - exact) < 1e-14);
  CHECK(arc_cauchy_integral(BoundaryFunction::zero(), L, G, z).value == complex(0.0));
  const complex w(0.5, 0.5);
  const complex o = oracle::segment_cauchy([](double t) { return 1.0 - t * t; }, w);
  CHECK(std::abs(arc_cauchy_integral(parabola, L, G, w).value - o) < 1e-10);
  CHECK(std::abs(o - oracle::segment_cauchy_parabola(w)) < 1e-12);
  // derivative of order one against the closed form
  const complex d = (-2.0 * w * std::log((w - 1.0) / (w + 1.0)) + (1.0 - w * w) * (1.0 / (w - 1.0) - 1.0 / (w + 1.0)) - 2.0) /
                    (2.0 * pi * I);
  CHECK(std::abs(arc_cauchy_integral(parabola, L, G, w, 1).value - d) < 1e-10);
}

TEST_CASE("arc integral is analytic off the arc") {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const QuadratureGrid G = arc_grid();
  const double h = 1e-4;
  for (const complex z : {complex(0.3, 0.6), complex(-1.5, -0.4), complex(2.0, 0.1)}) {
    auto f = [&](complex p) { return arc_cauchy_integral(parabola, L, G, p).value; };
    const complex dx = (f(z + h) - f(z - h)) / (2.0 * h);
    const complex dy = (f(z + I * h) - f(z - I * h)) / (2.0 * h);
    CHECK(std::abs(dy - I * dx) < 1e-8);
  }
}

TEST_CASE("simple zero at infinity") {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const QuadratureGrid G = arc_grid();
  const complex mass = 4.0 / 3.0;
  const complex z(1e3, 300.0);
  const complex lim = -mass / (2.0 * pi * I);
  CHECK(std::abs(z * arc_cauchy_integral(parabola, L, G, z).value - lim) / std::abs(lim) < 1e-4);
}

TEST_CASE("plemelj limits for a constant density") {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const auto [p, m] = plemelj_limits(one, L, arc_grid(), 0.0);
  CHECK(std::abs(p.value - 0.5) < 1e-14);
  CHECK(std::abs(m.value + 0.5) < 1e-14);
  CHECK(p.side == Side::Plus);
  CHECK(m.side == Side::Minus);
}

TEST_CASE("jump and sum relations") {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const QuadratureGrid G = arc_grid();
  const auto [p, m] = plemelj_limits(parabola, L, G, 0.3);
  CHECK(std::abs(p.value - m.value - 0.91) < 1e-12);
  for (double x : {-0.7, -0.1, 0.45, 0.8}) {
    const auto [pp, mm] = plemelj_limits(parabola, L, G, x);
    const double pv = oracle::pv_interval([](double t) { return 1.0 - t * t; }, -1.0, 1.0, x);
    CHECK(std::abs(pp.value + mm.value - pv / (pi * I)) < 1e-8);
    CHECK(std::abs(pp.value - mm.value - (1.0 - x * x)) < 1e-8);
  }
}

TEST_CASE("one-sided limits agree with nearby off-arc values") {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const QuadratureGrid G = arc_grid(32, 16);
  const auto [p, m] = plemelj_limits(parabola, L, G, 0.2);
  CHECK(std::abs(oracle::segment_cauchy_parabola(complex(0.2, 1e-7)) - p.value) < 1e-5);
  CHECK(std::abs(oracle::segment_cauchy_parabola(complex(0.2, -1e-7)) - m.value) < 1e-5);
  const ArcValue near = arc_cauchy_integral(parabola, L, G, complex(0.2, 1e-3));
  CHECK(near.ill_conditioned);
  const ArcValue off = arc_cauchy_integral(parabola, L, G, complex(0.2, 0.3));
  CHECK_FALSE(off.ill_conditioned);
  CHECK(std::abs(off.value - oracle::segment_cauchy_parabola(complex(0.2, 0.3))) < 1e-10);
}

TEST_CASE("endpoint margin") {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  CHECK_THROWS_AS(plemelj_limits(parabola, L, arc_grid(), 0.99), Error);
  try {
    plemelj_limits(parabola, L, arc_grid(), -0.995);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EndpointSingularity);
  }
}

TEST_CASE("curved arc jump") {
  const JordanArc A = JordanArc::circular(0.0, 1.0, 0.2, 2.5);
  const QuadratureGrid G = arc_grid();
  BoundaryFunction g([](complex t) { return std::exp(t); }, {[](complex t) { return std::exp(t); }});
  for (double s : {0.2, 0.5, 0.8}) {
    const complex z0 = A.z(s);
    const auto [p, m] = plemelj_limits(g, A, G, z0);
    CHECK(std::abs(p.value - m.value - g(z0)) < 1e-8);
  }
}

TEST_CASE("closing an arc recovers the closed-contour limits") {
  // The upper and lower unit semicircles together form the unit circle.
  const JordanArc up = JordanArc::circular(0.0, 1.0, 0.0, pi);
  const JordanArc down = JordanArc::circular(0.0, 1.0, pi, 2.0 * pi);
  const QuadratureGrid G = arc_grid();
  BoundaryFunction f([](complex t) { return 1.0 / (t - 2.0); }, {[](complex t) { return -1.0 / ((t - 2.0) * (t - 2.0)); }});
  const complex z0 = std::polar(1.0, 1.2);
  const auto [p, m] = plemelj_limits(f, up, G, z0);
  const complex rest = arc_cauchy_integral(f, down, G, z0).value;
  const auto [C, GC] = build_unit_circle(256);
  CHECK(std::abs(p.value + rest - one_sided_limit(f, C, GC, z0, Side::Plus)) < 1e-8);
  CHECK(std::abs(m.value + rest - one_sided_limit(f, C, GC, z0, Side::Minus)) < 1e-8);
}

TEST_CASE("reconstruction from the jump") {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const QuadratureGrid G = arc_grid();
  const complex z(0.0, 2.0);
  CHECK(std::abs(reconstruct_from_jump(one, L, G, z).value - arc_cauchy_integral(one, L, G, z).value) < 1e-15);
  CHECK(reconstruct_from_jump(BoundaryFunction::zero(), L, G, z).value == complex(0.0));
  for (int k = 0; k < 20; ++k) {
    const complex w = std::polar(1.3 + 0.1 * (k % 4), 2.0 * pi * k / 20.0 + 0.1);
    CHECK(std::abs(reconstruct_from_jump(parabola, L, G, w).value - oracle::segment_cauchy_parabola(w)) < 1e-8);
  }
}

TEST_CASE("poincare-bertrand") {
  const PoincareBertrandReport zero = poincare_bertrand_residual([](double, double) { return complex(0.0); }, -1.0, 1.0, 0.0);
  CHECK(zero.residual == 0.0);
  const PoincareBertrandReport c = poincare_bertrand_residual([](double, double) { return complex(1.0); }, -1.0, 1.0, 0.0);
  CHECK(c.residual < 1e-6);
  CHECK_FALSE(c.slow_convergence);
  CHECK(std::abs(c.lhs + pi * pi / 2.0) < 1e-6);
  const PoincareBertrandReport tt = poincare_bertrand_residual([](double t, double s) { return complex(t * s); }, -1.0, 1.0, 0.2);
  CHECK(tt.residual < 1e-6);
  const PoincareBertrandReport cubic =
      poincare_bertrand_residual([](double t, double s) { return complex(t * t * s - s * s * s + 0.5 * t); }, -1.0, 1.0, -0.35);
  CHECK(cubic.residual < 1e-5);
  CHECK_FALSE(cubic.slow_convergence);
}
