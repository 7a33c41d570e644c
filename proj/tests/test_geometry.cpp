#include <doctest.h>

#include <cmath>
#include <random>

#include "cauchy/geometry.hpp"
#include "cauchy/spectral.hpp"
#include "oracles.hpp"

using namespace cauchy;

TEST_CASE("quadrature rules integrate their measure") {
  CHECK(periodic_trapezoid(16).weight_sum() == doctest::Approx(2.0 * pi).epsilon(1e-15));
  CHECK(gauss_legendre(24).weight_sum() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gauss_legendre_panels(-1.0, 3.0, 5, 12).weight_sum() == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(graded_panels(0.0, 1.0, 10, 12).weight_sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gauss-legendre is exact for polynomials of degree 2n-1") {
  const QuadratureGrid g = gauss_legendre(10);
  double s = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) s += std::pow(g.nodes[j], 18) * g.weights[j];
  CHECK(s == doctest::Approx(2.0 / 19.0).epsilon(1e-13));
}

TEST_CASE("gauss-chebyshev weights reproduce weighted moments") {
  // int sqrt((1+x)/(1-x)) dx = pi and int x sqrt((1+x)/(1-x)) dx = pi/2
  const QuadratureGrid g = gauss_chebyshev(32, ChebyshevWeight::ThirdKind);
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    m0 += g.weights[j];
    m1 += g.nodes[j] * g.weights[j];
  }
  const double o0 = oracle::chord_weighted([](double) { return 1.0; });
  const double o1 = oracle::chord_weighted([](double x) { return x; });
  CHECK(std::abs(m0 - o0) < 1e-12);
  CHECK(std::abs(m1 - o1) < 1e-12);
  CHECK(std::abs(o0 - pi) < 1e-13);
  const double ts = oracle::tanh_sinh([](double x) { return std::exp(x) / std::sqrt(1.0 - x * x); }, -1.0, 1.0);
  const QuadratureGrid g1 = gauss_chebyshev(32, ChebyshevWeight::FirstKind);
  double m2 = 0.0;
  for (std::size_t j = 0; j < g1.size(); ++j) m2 += std::exp(g1.nodes[j]) * g1.weights[j];
  CHECK(std::abs(m2 - ts) < 1e-7);
  for (std::size_t j = 1; j < g.size(); ++j) CHECK(g.nodes[j] > g.nodes[j - 1]);
}

TEST_CASE("spectral derivative of a trigonometric polynomial") {
  const std::size_t n = 32;
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = std::sin(3.0 * 2.0 * pi * j / n) + 0.5;
  const auto d = periodic_derivative(s, 1);
  for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(d[j] - 3.0 * std::cos(3.0 * 2.0 * pi * j / n)) < 1e-12);
  std::vector<complex> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = std::polar(1.0, 2.0 * pi * j / n);
  const TrigInterpolant ti(c);
  CHECK(std::abs(ti(0.3) - std::polar(1.0, 0.3)) < 1e-13);
}

TEST_CASE("build_unit_circle") {
  const auto [C, G] = build_unit_circle(16);
  CHECK(C.z(0.0) == complex(1.0, 0.0));
  CHECK(std::abs(C.dz(0.0) - I) < 1e-15);
  CHECK(G.weight_sum() == doctest::Approx(2.0 * pi));
  CHECK_THROWS_AS(build_unit_circle(7), Error);
  CHECK_THROWS_AS(build_unit_circle(6), Error);
  try {
    build_unit_circle(9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGrid);
  }

  const auto [C2, G2] = build_unit_circle(256);
  CHECK(std::abs(contour_integral(BoundaryFunction::constant(1.0), C2, G2)) < 1e-14);
  const auto [C3, G3] = build_unit_circle(64);
  const complex r = contour_integral(BoundaryFunction([](complex t) { return 1.0 / t; }), C3, G3);
  CHECK(std::abs(r - 2.0 * pi * I) / (2.0 * pi) < 1e-13);
}

TEST_CASE("contour integral examples") {
  const auto [C, G] = build_unit_circle(64);
  CHECK(std::abs(contour_integral(BoundaryFunction([](complex t) { return t * t; }), C, G)) < 1e-13);
  CHECK(contour_integral(BoundaryFunction::zero(), C, G) == complex(0.0, 0.0));
  BoundaryFunction bad([](complex) { return complex(std::nan(""), 0.0); });
  CHECK_THROWS_AS(contour_integral(bad, C, G), Error);
}

TEST_CASE("trapezoid rule converges geometrically on analytic integrands") {
  BoundaryFunction f([](complex t) { return 1.0 / (t - 0.6); });
  double prev = 1.0;
  for (std::size_t n : {16, 32, 64}) {
    const auto [C, G] = build_unit_circle(n);
    const double err = std::abs(contour_integral(f, C, G) - 2.0 * pi * I);
    if (prev > 1e-13) CHECK(err <= std::max(prev / 10.0, 1e-13));
    prev = err;
  }
}

TEST_CASE("classify_point verdicts") {
  const auto [C, G] = build_unit_circle(256);
  const auto in = classify_point(C, G, 0.0, 1e-8);
  CHECK(in.verdict == Verdict::Inside);
  CHECK(in.winding == 1);
  const auto out = classify_point(C, G, 2.0, 1e-8);
  CHECK(out.verdict == Verdict::Outside);
  CHECK(out.winding == 0);
  CHECK(classify_point(C, G, 1.0, 1e-6).verdict == Verdict::OnContour);
  CHECK_THROWS_AS(classify_point(C, G, complex(std::nan(""), 0.0), 1e-8), Error);
  CHECK_THROWS_AS(classify_point(C, G, 0.0, 0.0), Error);
}

TEST_CASE("classify_point winding is integral away from the contour") {
  const ClosedContour E = ClosedContour::ellipse(0.2, 1.5, 0.7);
  const QuadratureGrid G = periodic_trapezoid(256);
  const double band = 10.0 * E.length(G) / 256.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  int tested = 0;
  while (tested < 60) {
    const complex z(U(rng), U(rng));
    const auto pc = classify_point(E, G, z);
    if (pc.distance <= band) continue;
    ++tested;
    CHECK(std::abs(pc.winding_raw - std::round(pc.winding_raw)) < 1e-6);
    CHECK((pc.verdict == Verdict::Inside) == (pc.winding == 1));
    CHECK((pc.verdict == Verdict::Outside) == (pc.winding == 0));
  }
}

TEST_CASE("near-zone points are flagged and still classified") {
  const auto [C, G] = build_unit_circle(64);
  const auto pc = classify_point(C, G, 0.999);
  CHECK(pc.near_zone);
  CHECK(pc.verdict == Verdict::Inside);
  CHECK(classify_point(C, G, 1.001).verdict == Verdict::Outside);
}

TEST_CASE("reversed contour") {
  const auto [C, G] = build_unit_circle(64);
  const ClosedContour R = C.reversed();
  CHECK_NOTHROW(C.validate(G));
  CHECK_NOTHROW(R.validate(G));
  CHECK(R.orientation() == -1);
  const complex r = contour_integral(BoundaryFunction([](complex t) { return 1.0 / t; }), R, G);
  CHECK(std::abs(r + 2.0 * pi * I) < 1e-13);
  CHECK(std::abs(pv_singular_weight(R, G, I) - pi * I) < 1e-15);
}

TEST_CASE("pv singular weight is location independent") {
  const auto [C, G] = build_unit_circle(64);
  CHECK(std::abs(pv_singular_weight(C, G, 1.0) + pi * I) < 1e-15);
  CHECK(std::abs(pv_singular_weight(C, G, I) + pi * I) < 1e-15);
  CHECK_THROWS_AS(pv_singular_weight(C, G, 0.5), Error);
  const ClosedContour E = ClosedContour::ellipse(0.0, 2.0, 1.0);
  const QuadratureGrid GE = periodic_trapezoid(128);
  for (double s0 : {0.0, 1.1, 4.0}) {
    CHECK(std::abs(pv_singular_weight(E, GE, E.z(s0)) + pi * I) < 1e-15);
    // P int dz/(t0 - z) by excision on the ellipse
    const complex o = -oracle::pv_closed([](complex) { return complex(1.0); },
                                         [&](double s) { return E.z(s); }, [&](double s) { return E.dz(s); }, s0);
    CHECK(std::abs(o + pi * I) < 1e-7);
  }
}

TEST_CASE("pv contour integral against the excision oracle") {
  const auto [C, G] = build_unit_circle(256);
  CHECK(std::abs(pv_contour_integral(BoundaryFunction::constant(1.0), C, G, 1.0).value - pi * I) < 1e-13);
  BoundaryFunction f([](complex t) { return 1.0 / (t - 2.0); });
  CHECK(std::abs(pv_contour_integral(f, C, G, 1.0).value - pi * I * (-1.0)) < 1e-12);
  BoundaryFunction id([](complex t) { return t; });
  CHECK(std::abs(pv_contour_integral(id, C, G, I).value + pi) < 1e-12);
  for (double s0 : {0.3, 2.0, 5.5}) {
    auto g = [](complex t) { return std::exp(t) / (t - 3.0); };
    const complex lib = pv_contour_integral(BoundaryFunction(g), C, G, std::polar(1.0, s0)).value;
    CHECK(std::abs(lib - oracle::pv_unit_circle(g, s0)) < 1e-7);
  }
  CHECK_THROWS_AS(pv_contour_integral(f, C, G, 0.3), Error);
}

TEST_CASE("pv on a node uses the removable limit") {
  const auto [C, G] = build_unit_circle(128);
  const double s0 = G.nodes[5];
  BoundaryFunction g([](complex t) { return std::sin(t); });
  const PvResult on = pv_contour_integral(g, C, G, C.z(s0));
  CHECK_FALSE(on.accuracy_warning);
  CHECK(std::abs(on.value - oracle::pv_unit_circle([](complex t) { return std::sin(t); }, s0)) < 1e-7);
}

TEST_CASE("pv is linear in the density") {
  const auto [C, G] = build_unit_circle(256);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const complex a(U(rng), U(rng)), b(U(rng), U(rng)), p(2.0 + U(rng), U(rng));
    BoundaryFunction f([p](complex t) { return 1.0 / (t - p); });
    BoundaryFunction g([](complex t) { return std::cos(t); });
    const complex t0 = std::polar(1.0, pi * U(rng));
    const complex lhs = pv_contour_integral(BoundaryFunction::combine(a, f, b, g), C, G, t0).value;
    const complex rhs = a * pv_contour_integral(f, C, G, t0).value + b * pv_contour_integral(g, C, G, t0).value;
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}
