// One pass/fail line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cauchy/airfoil.hpp"
#include "cauchy/cauchy_core.hpp"
#include "cauchy/hilbert.hpp"
#include "cauchy/plemelj.hpp"
#include "cauchy/singularity_lab.hpp"
#include "oracles.hpp"

using namespace cauchy;

namespace {

int failures = 0;

struct Measure {
  std::string what;
  double value;
  double tol;
  bool ok() const { return std::isfinite(value) && value < tol; }
};

void report(int id, const std::string& title, const std::vector<Measure>& ms) {
  const bool pass = std::all_of(ms.begin(), ms.end(), [](const Measure& m) { return m.ok(); });
  if (!pass) ++failures;
  std::printf("[%s] %2d %s:", pass ? "PASS" : "FAIL", id, title.c_str());
  for (const auto& m : ms) std::printf(" %s=%.3g(<%.0e)", m.what.c_str(), m.value, m.tol);
  std::printf("\n");
}

std::vector<complex> ring(std::size_t count, double radius, double phase) {
  std::vector<complex> p;
  for (std::size_t k = 0; k < count; ++k) p.push_back(std::polar(radius, phase + 2.0 * pi * k / count));
  return p;
}

std::vector<complex> boundary_samples(const std::function<complex(complex)>& f, std::size_t n) {
  std::vector<complex> s;
  for (std::size_t j = 0; j < n; ++j) s.push_back(f(std::polar(1.0, 2.0 * pi * j / n)));
  return s;
}

BoundaryFunction expo() {
  auto e = [](complex t) { return std::exp(t); };
  return BoundaryFunction(e, {e, e, e, e});
}

void boundary_relations() {
  const auto [C, G] = build_unit_circle(256);
  const BoundaryFunction pole = catalog_function(SingularityPrescription::pole(2.0));
  const BoundaryFunction e = expo();
  double r1 = 0.0, r2 = 0.0;
  for (const BoundaryFunction* f : {&pole, &e}) {
    for (const complex t0 : ring(32, 1.0, 0.05)) {
      r1 = std::max(r1, std::abs(one_sided_limit(*f, C, G, t0, Side::Plus) - (*f)(t0)));
      r2 = std::max(r2, std::abs(boundary_value(*f, C, G, t0, 0) - (*f)(t0)));
    }
  }
  report(1, "boundary relations", {{"I", r1, 1e-8}, {"II", r2, 1e-8}});
}

void exterior_annihilation() {
  const auto [C, G] = build_unit_circle(256);
  std::vector<complex> ext;
  for (int k = 0; k < 50; ++k) ext.push_back(std::polar(1.1 + 0.2 * (k % 10), 0.53 * k + 0.02));
  double worst = 0.0;
  for (const auto& p : {SingularityPrescription::pole(2.0), SingularityPrescription::algebraic(2.0, -0.5),
                        SingularityPrescription::constant(1.0)}) {
    worst = std::max(worst, exterior_annihilation_check(p, C, G, ext, 2));
  }
  report(2, "exterior annihilation", {{"max|J_n|", worst, 1e-9}});
}

void equivalent_formulas() {
  const auto [C, G] = build_unit_circle(256);
  double spread = 0.0, err = 0.0;
  for (const complex z : {complex(0.0), complex(0.3, 0.2), complex(-0.5, 0.4), complex(0.1, -0.7)}) {
    std::vector<complex> v;
    for (int m = 0; m <= 3; ++m) v.push_back(generalized_functional(expo(), C, G, z, 3, m).value);
    for (std::size_t i = 0; i < v.size(); ++i) {
      err = std::max(err, std::abs(v[i] - std::exp(z)));
      for (std::size_t j = i + 1; j < v.size(); ++j) spread = std::max(spread, std::abs(v[i] - v[j]));
    }
  }
  report(3, "equivalent formulas", {{"pairwise", spread, 1e-9}, {"vs e^z", err, 1e-9}});
}

void vanishing_integrals() {
  const auto [C, G] = build_unit_circle(256);
  const BoundaryFunction pole = catalog_function(SingularityPrescription::pole(2.0));
  double worst = 0.0;
  for (const BoundaryFunction& f : {pole, expo()}) {
    for (int n = 0; n <= 1; ++n) worst = std::max(worst, std::abs(vanishing_contour_integral(f, C, G, n)));
  }
  report(4, "vanishing contour integrals", {{"max", worst, 1e-8}});
}

void hilbert_line_pair() {
  std::vector<double> xi;
  for (int i = 0; i <= 100; ++i) xi.push_back(-5.0 + 0.1 * i);
  const RealLineFunction v{[](double x) { return -1.0 / (x * x + 1.0); }, 2.0, 50.0, {}};
  const TransformResult u = hilbert_line(v, xi);
  const TransformResult back = hilbert_line_inverse(hilbert_line_function(v), xi);
  double e1 = 0.0, e2 = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    e1 = std::max(e1, std::abs(u.values[i] - xi[i] / (xi[i] * xi[i] + 1.0)));
    e2 = std::max(e2, std::abs(back.values[i] - v(xi[i])));
  }
  report(5, "hilbert line pair", {{"pair", e1, 5e-6}, {"round-trip", e2, 5e-6}});
}

void circular_transform() {
  const std::size_t n = 512;
  const PeriodicFunction s = PeriodicFunction::from([](double t) { return std::sin(t); }, n);
  const PeriodicFunction u = hilbert_circular(s);
  const PeriodicFunction U = hilbert_circular_complementary(s);
  double e = 0.0, neg = 0.0, modes = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    e = std::max(e, std::abs(u.samples[j] - std::cos(PeriodicFunction::angle(j, n))));
    neg = std::max(neg, std::abs(u.samples[j] + U.samples[j]));
  }
  for (int k = 1; k <= 16; ++k) {
    const auto a = hilbert_circular(PeriodicFunction::from([k](double t) { return std::sin(k * t); }, n));
    const auto b = hilbert_circular(PeriodicFunction::from([k](double t) { return std::cos(k * t); }, n));
    for (std::size_t j = 0; j < n; ++j) {
      const double th = PeriodicFunction::angle(j, n);
      modes = std::max({modes, std::abs(a.samples[j] - std::cos(k * th)), std::abs(b.samples[j] + std::sin(k * th))});
    }
  }
  report(6, "circular transform", {{"sin->cos", e, 1e-10}, {"negation", neg, 1e-300}, {"modes", modes, 1e-9}});
}

void parseval() {
  const std::size_t n = 512;
  const auto cu = PeriodicFunction::from([](double t) { return std::cos(t); }, n);
  const auto sv = PeriodicFunction::from([](double t) { return std::sin(t); }, n);
  const RealLineFunction lu{[](double x) { return x / (x * x + 1.0); }, 1.0, 50.0, {}};
  const RealLineFunction lv{[](double x) { return -1.0 / (x * x + 1.0); }, 2.0, 50.0, {}};
  report(7, "parseval", {{"circle", parseval_circle(cu, sv).gap, 1e-8}, {"line", parseval_line(lu, lv).gap, 1e-5}});
}

void plemelj() {
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const QuadratureGrid G = arc_grid();
  const BoundaryFunction g([](complex t) { return 1.0 - t * t; }, {[](complex t) { return -2.0 * t; }});
  double jump = 0.0;
  for (int k = 0; k < 16; ++k) {
    const double x = -0.9 + 1.8 * k / 15.0;
    const auto [p, m] = plemelj_limits(g, L, G, x);
    jump = std::max(jump, std::abs(p.value - m.value - g(x)));
  }
  double rec = 0.0;
  for (int k = 0; k < 20; ++k) {
    const complex z = std::polar(0.6 + 0.25 * (k % 5), 2.0 * pi * k / 20.0 + 0.13);
    const complex direct = oracle::segment_cauchy([](double t) { return 1.0 - t * t; }, z);
    rec = std::max(rec, std::abs(reconstruct_from_jump(g, L, G, z).value - direct));
  }
  report(8, "plemelj", {{"jump", jump, 1e-8}, {"reconstruction", rec, 1e-8}});
}

void poincare_bertrand() {
  const TwoVariableDensity dens[] = {
      [](double, double) { return complex(1.0); },
      [](double t, double tp) { return complex(t * tp); },
      [](double t, double tp) { return complex(t * t + tp * tp); },
  };
  double fine = 0.0, coarse = 0.0;
  bool slow = false;
  for (const auto& f : dens) {
    for (double x0 : {0.0, 0.2, -0.55}) {
      const PoincareBertrandReport r = poincare_bertrand_residual(f, -1.0, 1.0, x0);
      fine = std::max(fine, r.residual);
      coarse = std::max(coarse, r.coarse_residual);
      slow = slow || r.slow_convergence;
    }
  }
  report(9, "poincare-bertrand", {{"fine", fine, 1e-5}, {"coarse", coarse, 1e-5}, {"slow", slow ? 1.0 : 0.0, 0.5}});
}

void airfoil() {
  const FlowConfig cfg{1.0, pi / 6.0, 1.0};
  const double gamma_exact = 2.0 * pi * cfg.speed * std::sin(cfg.incidence);
  const double lift_exact = 2.0 * pi * cfg.density * cfg.speed * cfg.speed * std::sin(cfg.incidence);
  const Lift L = lift(cfg, 128);
  const SurfaceVelocity up = surface_velocities_from_limits(cfg, 0.0, Side::Plus, 128);
  const SurfaceVelocity dn = surface_velocities_from_limits(cfg, 0.0, Side::Minus, 128);
  const double surf = std::max(std::abs(up.u - 0.5), std::abs(dn.u + 0.5));
  report(10, "airfoil",
         {{"gamma", oracle::rel(circulation(cfg, 128), gamma_exact), 1e-8},
          {"|L|", oracle::rel(L.magnitude, lift_exact), 1e-8},
          {"u(0)", surf, 1e-10},
          {"routes", circulation_routes(cfg, 128).spread(), 1e-8},
          {"L.U", L.orthogonality, 1e-12}});
}

void finite_hilbert() {
  auto v = [](double x) { return -1.0 + 0.3 * x; };
  const SheetDensity g = finite_hilbert_inverse(v);
  std::vector<double> xs;
  for (int i = 0; i < 39; ++i) xs.push_back(-0.95 + 0.05 * i);
  const auto back = finite_hilbert_transform(g, xs);
  double e = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) e = std::max(e, std::abs(back[i] - v(xs[i])));
  const double lead = std::abs(std::abs(edge_exponent(g, Edge::Leading)) - 0.5);
  report(11, "finite hilbert inversion", {{"GG^-1", e, 1e-8}, {"edge", lead, 0.02}, {"gamma(1)", std::abs(g(1.0)), 1e-14}});
}

void inverse_probe() {
  const ProbeReport one = probe_boundary_samples(boundary_samples([](complex t) { return 1.0 / (t - 2.0); }, 256));
  const double e1 = one.locations.size() == 1 && one.asserted ? std::abs(one.locations[0] - 2.0) / 2.0 : 1.0;
  const complex a = 2.0, b(0.0, -3.0);
  const ProbeReport two = probe_boundary_samples(boundary_samples([&](complex t) { return 1.0 / (t - a) + 1.0 / (t - b); }, 256));
  double e2 = 1.0;
  if (two.locations.size() == 2 && two.asserted) {
    e2 = 0.0;
    for (const complex p : {a, b}) {
      double best = 1e300;
      for (const complex q : two.locations) best = std::min(best, std::abs(q - p) / std::abs(p));
      e2 = std::max(e2, best);
    }
  }
  const BoundaryFunction br = catalog_function(SingularityPrescription::algebraic(2.0, -0.5));
  const ProbeReport branch = probe_boundary_samples(boundary_samples([&](complex t) { return br(t); }, 256));
  report(12, "inverse probe", {{"one pole", e1, 1e-4}, {"two poles", e2, 1e-3}, {"branch asserted", branch.asserted ? 1.0 : 0.0, 0.5}});
}

void mean_value_and_inequality() {
  double gap = 0.0;
  for (int n = 0; n <= 2; ++n) {
    gap = std::max(gap, mean_value_check(expo(), complex(0.3, 0.1), 0.5, n).gap);
    gap = std::max(gap, mean_value_check(expo(), -0.2, 1.5, n).gap);
  }
  double eq = 0.0;
  bool satisfied = true;
  for (int k = 1; k <= 6; ++k) {
    std::vector<BoundaryFunction::Evaluator> d;
    for (int j = 1; j <= k; ++j) {
      double c = 1.0;
      for (int i = 0; i < j; ++i) c *= k - i;
      d.push_back([=](complex t) { return c * std::pow(t, k - j); });
    }
    const BoundaryFunction mono([k](complex t) { return std::pow(t, k); }, d);
    const BoundCheck bc = derivative_bound_check(mono, 0.0, 1.0, k, 0);
    satisfied = satisfied && bc.satisfied;
    eq = std::max(eq, std::abs(bc.bound - bc.actual) / bc.bound);
  }
  report(13, "mean value and cauchy inequality",
         {{"gap", gap, 1e-10}, {"equality", eq, 1e-12}, {"violations", satisfied ? 0.0 : 1.0, 0.5}});
}

}  // namespace

int main() {
  boundary_relations();
  exterior_annihilation();
  equivalent_formulas();
  vanishing_integrals();
  hilbert_line_pair();
  circular_transform();
  parseval();
  plemelj();
  poincare_bertrand();
  airfoil();
  finite_hilbert();
  inverse_probe();
  mean_value_and_inequality();
  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
