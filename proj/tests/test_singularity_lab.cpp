#include <doctest.h>

#include <cmath>

#include "cauchy/singularity_lab.hpp"
#include "oracles.hpp"

using namespace cauchy;

namespace {

std::vector<complex> samples_of(const std::function<complex(complex)>& f, std::size_t n, double theta0 = 0.0) {
  std::vector<complex> s;
  for (std::size_t j = 0; j < n; ++j) s.push_back(f(std::polar(1.0, theta0 + 2.0 * pi * j / n)));
  return s;
}

}  // namespace

TEST_CASE("catalog functions") {
  const BoundaryFunction p = catalog_function(SingularityPrescription::pole(2.0));
  CHECK(std::abs(p(I) - 1.0 / (I - 2.0)) < 1e-15);
  CHECK(std::abs(p.derivative(1, I) + 1.0 / ((I - 2.0) * (I - 2.0))) < 1e-15);
  const BoundaryFunction b = catalog_function(SingularityPrescription::algebraic(2.0, -0.5));
  for (const complex t : {complex(1.0), I, complex(-1.0), complex(0.3, -0.9)}) {
    CHECK(std::abs(b(t) + I * std::pow(2.0 - t, -0.5)) < 1e-14);
  }
  // the cut runs along [2, inf): values just above and below 3 differ in sign
  CHECK(std::abs(b(complex(3.0, 1e-12)) + b(complex(3.0, -1e-12))) < 1e-6);
  const BoundaryFunction c = catalog_function(SingularityPrescription::constant(1.0));
  CHECK(c(complex(0.4, 0.2)) == complex(1.0));
  CHECK_THROWS_AS(catalog_function(SingularityPrescription::pole(0.5)), Error);
  CHECK_THROWS_AS(SingularityPrescription::algebraic(0.9, -0.5).validate(), Error);
}

TEST_CASE("branch cut toward the circle is rejected") {
  SingularityPrescription p = SingularityPrescription::logarithmic(2.0);
  p.cut_direction = complex(-1.0, 0.0);
  CHECK_THROWS_AS(p.validate(), Error);
  p.cut_direction = complex(0.0, 1.0);
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("catalog derivatives match finite differences") {
  const double h = 1e-4;
  for (const auto& p : {SingularityPrescription::pole(complex(1.5, 1.0), 2), SingularityPrescription::algebraic(2.0, -0.5),
                        SingularityPrescription::logarithmic(complex(0.0, -2.5))}) {
    const BoundaryFunction f = catalog_function(p);
    for (const complex t : {complex(0.6, 0.3), complex(-0.8, -0.2)}) {
      const complex fd = (f(t - 2.0 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2.0 * h)) / (12.0 * h);
      CHECK(std::abs(fd - f.derivative(1, t)) < 1e-6 * (1.0 + std::abs(fd)));
    }
  }
}

TEST_CASE("direct problem dichotomy") {
  const auto [C, G] = build_unit_circle(256);
  std::vector<complex> ext{1.2, complex(0.0, 2.0), -5.0, complex(7.0, 7.0)};
  for (int k = 0; k < 50; ++k) ext.push_back(std::polar(1.1 + 0.09 * (k % 10), 0.41 * k + 0.05));
  std::vector<complex> in;
  for (int k = 0; k < 40; ++k) in.push_back(std::polar(0.9 * (k + 1) / 40.0, 0.83 * k));
  for (const auto& p : {SingularityPrescription::pole(2.0), SingularityPrescription::pole(complex(0.0, -1.6), 2, complex(0.5, 1.0)),
                        SingularityPrescription::algebraic(2.0, -0.5), SingularityPrescription::logarithmic(complex(-2.0, 0.5)),
                        SingularityPrescription::constant(1.0)}) {
    CHECK(exterior_annihilation_check(p, C, G, ext, 2) < 1e-9);
    CHECK(interior_reproduction_check(p, C, G, in, 2) < 1e-9);
  }
  CHECK(exterior_annihilation_check(SingularityPrescription::pole(2.0), C, G, {1.2, 2.0, 5.0, 10.0}, 0) < 1e-9);
  CHECK(exterior_annihilation_check(SingularityPrescription::constant(1.0), C, G, {1.5}, 0) < 1e-10);
  CHECK(exterior_annihilation_check(SingularityPrescription::algebraic(2.0, -0.5), C, G, {1.3, complex(1.5, 0.2), -1.8}, 0) < 1e-8);
}

TEST_CASE("taylor coefficients") {
  const auto tc = taylor_coefficients(samples_of([](complex t) { return 1.0 / (t - 2.0); }, 128), 40);
  for (std::size_t n = 0; n < tc.c.size(); ++n) CHECK(std::abs(tc.c[n] + std::pow(2.0, -static_cast<double>(n + 1))) < 1e-15);
  CHECK_FALSE(tc.interior_singularity);
  const auto one = taylor_coefficients(samples_of([](complex) { return complex(1.0); }, 64), 10);
  CHECK(std::abs(one.c[0] - 1.0) < 1e-15);
  for (std::size_t n = 1; n < one.c.size(); ++n) CHECK(std::abs(one.c[n]) < 1e-15);
  const auto cube = taylor_coefficients(samples_of([](complex t) { return t * t * t; }, 64, 0.4), 10, 0.4);
  for (std::size_t n = 0; n < cube.c.size(); ++n) CHECK(std::abs(cube.c[n] - (n == 3 ? 1.0 : 0.0)) < 1e-14);
  const auto inner = taylor_coefficients(samples_of([](complex t) { return 1.0 / (t - 0.5); }, 64), 10);
  CHECK(inner.interior_singularity);
  CHECK_THROWS_AS(taylor_coefficients(samples_of([](complex t) { return t; }, 16), 8), Error);
}

TEST_CASE("coefficient decay gives the singularity radius") {
  const std::size_t n = 256;
  const auto pole = taylor_coefficients(samples_of([](complex t) { return 1.0 / (t - 2.0); }, n), 60);
  CHECK(std::abs(singularity_radius_estimate(pole.c).rate * 2.0 - 1.0) < 0.02);
  const BoundaryFunction b = catalog_function(SingularityPrescription::algebraic(2.0, -0.5));
  const auto br = taylor_coefficients(samples_of([&](complex t) { return b(t); }, n), 60);
  CHECK(std::abs(singularity_radius_estimate(br.c).rate * 2.0 - 1.0) < 0.02);
  const auto lg = taylor_coefficients(samples_of([](complex t) { return std::log(1.5 - t); }, n), 60);
  CHECK(std::abs(singularity_radius_estimate(lg.c).rate * 1.5 - 1.0) < 0.02);
}

TEST_CASE("pade probe on exact coefficients") {
  std::vector<complex> c;
  for (int n = 0; n < 20; ++n) c.push_back(-std::pow(2.0, -(n + 1.0)));
  const ProbeReport r = pade_pole_probe(c, 0, 1);
  REQUIRE(r.locations.size() == 1);
  CHECK(std::abs(r.locations[0] - 2.0) < 1e-6);
  CHECK(std::abs(r.strengths[0] - 1.0) < 1e-6);
  std::vector<complex> two;
  const complex a = 2.0, b(0.0, -3.0);
  for (int n = 0; n < 20; ++n) two.push_back(-std::pow(a, -(n + 1.0)) - std::pow(b, -(n + 1.0)));
  const ProbeReport r2 = pade_pole_probe(two, 1, 2);
  REQUIRE(r2.locations.size() == 2);
  for (const complex p : {a, b}) {
    double best = 1.0;
    for (const complex q : r2.locations) best = std::min(best, std::abs(q - p));
    CHECK(best < 1e-5);
  }
  std::vector<complex> one(20, complex(0.0));
  one[0] = 1.0;
  CHECK(pade_pole_probe(one, 0, 1).locations.empty());
  CHECK_THROWS_AS(pade_pole_probe(std::vector<complex>(2, complex(1.0)), 1, 2), Error);
}

TEST_CASE("probe from boundary samples") {
  const auto single = probe_boundary_samples(samples_of([](complex t) { return 1.0 / (t - 2.0); }, 256));
  REQUIRE(single.locations.size() == 1);
  CHECK(std::abs(single.locations[0] - 2.0) / 2.0 < 1e-4);
  CHECK(single.asserted);
  CHECK(single.boundary_residual >= 0.0);
  for (const complex l : single.locations) CHECK(std::abs(l) > 1.0);

  const auto shifted = probe_boundary_samples(samples_of([](complex t) { return 3.0 / (t - complex(0.5, 1.5)); }, 128, -pi), -pi);
  REQUIRE(shifted.locations.size() == 1);
  CHECK(std::abs(shifted.locations[0] - complex(0.5, 1.5)) < 1e-6);
  CHECK(std::abs(shifted.strengths[0] - 3.0) < 1e-5);

  const auto cst = probe_boundary_samples(samples_of([](complex) { return complex(1.0); }, 64));
  CHECK(cst.locations.empty());

  const BoundaryFunction b = catalog_function(SingularityPrescription::algebraic(2.0, -0.5));
  const auto br = probe_boundary_samples(samples_of([&](complex t) { return b(t); }, 256));
  CHECK_FALSE(br.asserted);
  CHECK_FALSE(br.notes.empty());

  CHECK_THROWS_AS(probe_boundary_samples(std::vector<complex>(30, complex(1.0))), Error);
  CHECK_THROWS_AS(probe_boundary_samples(std::vector<complex>(33, complex(1.0))), Error);
}

TEST_CASE("probe rejects data with interior singularities") {
  const auto r = probe_boundary_samples(samples_of([](complex t) { return 1.0 / (t - 0.5) + 1.0 / (t - 3.0); }, 128));
  CHECK_FALSE(r.asserted);
}
