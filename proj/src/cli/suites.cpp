#include "cli/suites.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "cauchy/airfoil.hpp"
#include "cauchy/cauchy_core.hpp"
#include "cauchy/hilbert.hpp"
#include "cauchy/plemelj.hpp"
#include "cauchy/singularity_lab.hpp"

namespace cauchy::cli {

namespace {

class Rows {
 public:
  explicit Rows(const SuiteConfig& cfg) : cfg_(cfg) {}

  void add(const std::string& id, double residual, double tol) {
    const double t = cfg_.tol.value_or(tol);
    rows_.push_back({id, residual, t, std::isfinite(residual) && residual <= t});
  }

  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  const SuiteConfig& cfg_;
  std::vector<CheckRow> rows_;
};

BoundaryFunction pole_two() { return catalog_function(SingularityPrescription::pole(2.0)); }

BoundaryFunction exponential() {
  auto e = [](complex t) { return std::exp(t); };
  return BoundaryFunction(e, {e, e, e, e});
}

std::vector<complex> circle_points(std::size_t count, double radius, double phase) {
  std::vector<complex> pts;
  for (std::size_t k = 0; k < count; ++k) {
    pts.push_back(std::polar(radius, phase + 2.0 * pi * static_cast<double>(k) / static_cast<double>(count)));
  }
  return pts;
}

std::vector<CheckRow> boundary_relations(const SuiteConfig& cfg) {
  Rows rows(cfg);
  const auto [C, G] = build_unit_circle(cfg.n);
  const auto on = circle_points(32, 1.0, 0.05);
  const std::pair<const char*, BoundaryFunction> fs[] = {{"pole", pole_two()}, {"exp", exponential()}};
  for (const auto& [name, f] : fs) {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    for (const complex t0 : on) {
      r1 = std::max(r1, std::abs(one_sided_limit(f, C, G, t0, Side::Plus) - f(t0)));
      r2 = std::max(r2, std::abs(boundary_value(f, C, G, t0, 0) - f(t0)));
      r3 = std::max(r3, std::abs(one_sided_limit(f, C, G, t0, Side::Minus)));
    }
    rows.add(std::string("relation-I/") + name, r1, 1e-8);
    rows.add(std::string("relation-II/") + name, r2, 1e-8);
    rows.add(std::string("exterior-limit/") + name, r3, 1e-8);
  }
  const BoundaryFunction f = pole_two();
  double r = 0.0;
  for (const complex t0 : on) r = std::max(r, std::abs(boundary_value(f, C, G, t0, 1) - f.derivative(1, t0)));
  rows.add("relation-II/pole/n=1", r, 1e-8);

  const ClosedContour E = ClosedContour::ellipse(0.1, 1.4, 0.8);
  const QuadratureGrid GE = periodic_trapezoid(cfg.n);
  E.validate(GE);
  r = 0.0;
  for (std::size_t k = 0; k < 16; ++k) {
    const complex t0 = E.z(0.3 + 2.0 * pi * static_cast<double>(k) / 16.0);
    r = std::max(r, std::abs(one_sided_limit(f, E, GE, t0, Side::Plus) - f(t0)));
  }
  rows.add("relation-I/pole/ellipse", r, 1e-8);

  BoundaryFunction F([](complex t) { return -1.0 / t; });
  F.with_decay(1.0);
  r = 0.0;
  for (const complex t0 : on) r = std::max(r, std::abs(complement_boundary_value(F, C, G, t0, 0) - F(t0)));
  rows.add("complement-boundary/-1/t", r, 1e-8);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double lin = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    const complex a(U(rng), U(rng)), b(U(rng), U(rng)), c(1.5 + std::abs(U(rng)), U(rng));
    BoundaryFunction g([c](complex t) { return 1.0 / (t - c); });
    const BoundaryFunction h = exponential();
    const BoundaryFunction comb = BoundaryFunction::combine(a, g, b, h);
    const complex t0 = std::polar(1.0, pi * U(rng));
    const complex lhs = pv_contour_integral(comb, C, G, t0).value;
    const complex rhs = a * pv_contour_integral(g, C, G, t0).value + b * pv_contour_integral(h, C, G, t0).value;
    lin = std::max(lin, std::abs(lhs - rhs));
  }
  rows.add("pv-linearity", lin, 1e-12);
  return rows.take();
}

std::vector<CheckRow> convergence(const SuiteConfig& cfg) {
  Rows rows(cfg);
  const auto [C, G] = build_unit_circle(cfg.n);
  std::vector<complex> targets;
  for (std::size_t k = 0; k < 100; ++k) {
    const double rad = 0.05 + 2.9 * static_cast<double>(k) / 99.0;
    targets.push_back(std::polar(rad, 0.61 * static_cast<double>(k)));
  }
  for (const complex t : circle_points(8, 1.0, 0.2)) targets.push_back(t);
  const std::tuple<const char*, BoundaryFunction, int, double> cases[] = {
      {"pole/n=0", pole_two(), 0, 1e-9},
      {"exp/n=2", exponential(), 2, 1e-8},
      {"constant/n=0", BoundaryFunction::constant(1.0), 0, 1e-12},
  };
  for (const auto& [name, f, n, tol] : cases) {
    const ResidualReport rep = uniform_convergence_residuals(f, C, G, targets, n);
    rows.add(std::string("uniform-g/") + name, rep.max_interior, tol);
    rows.add(std::string("uniform-G/") + name, rep.max_exterior, tol);
  }
  double prev = 0.0;
  double ratio_worst = 0.0;
  for (std::size_t N : {16, 32, 64}) {
    const auto [c2, g2] = build_unit_circle(N);
    BoundaryFunction shifted([](complex t) { return 1.0 / (t - 0.5); });
    const double err = std::abs(contour_integral(shifted, c2, g2) - 2.0 * pi * I);
    if (prev > 1e-13) ratio_worst = std::max(ratio_worst, err / prev);
    prev = err;
  }
  rows.add("trapezoid-geometric-ratio", ratio_worst, 0.1);
  std::vector<complex> ext;
  for (std::size_t k = 0; k < 50; ++k) ext.push_back(std::polar(1.1 + 0.08 * static_cast<double>(k % 10), 0.37 * static_cast<double>(k)));
  rows.add("exterior-annihilation/pole/n<=2",
           exterior_annihilation_check(SingularityPrescription::pole(2.0), C, G, ext, 2), 1e-9);
  return rows.take();
}

std::vector<CheckRow> integral_theorems(const SuiteConfig& cfg) {
  Rows rows(cfg);
  const auto [C, G] = build_unit_circle(cfg.n);
  const BoundaryFunction f = pole_two();
  const BoundaryFunction sq([](complex t) { return t * t; }, {[](complex t) { return 2.0 * t; }});
  rows.add("vanishing/pole/n=0", std::abs(vanishing_contour_integral(f, C, G, 0)), 1e-8);
  rows.add("vanishing/pole/n=1", std::abs(vanishing_contour_integral(f, C, G, 1)), 1e-8);
  rows.add("vanishing/t^2/n=1", std::abs(vanishing_contour_integral(sq, C, G, 1)), 1e-8);
  BoundaryFunction F([](complex t) { return 1.0 / (t * t); }, {[](complex t) { return -2.0 / (t * t * t); }});
  F.with_decay(2.0);
  rows.add("vanishing-complement/t^-2/n=0",
           std::abs(vanishing_contour_integral(F, C, G, 0, DensityKind::Complement)), 1e-8);
  rows.add("cauchy-theorem/t^2", std::abs(contour_integral(sq, C, G)), 1e-13);

  const BoundaryFunction e = exponential();
  double spread = 0.0;
  for (const complex z : {complex(0.3, 0.2), complex(-0.5, 0.1)}) {
    std::vector<complex> v;
    for (int m = 0; m <= 3; ++m) v.push_back(generalized_functional(e, C, G, z, 3, m).value);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) spread = std::max(spread, std::abs(v[i] - v[j]));
  }
  rows.add("equivalent-formulas/exp/n=3", spread, 1e-9);
  rows.add("mean-value/exp/n=0", mean_value_check(e, complex(0.3, 0.1), 0.5, 0).gap, 1e-10);
  rows.add("mean-value/exp/n=1", mean_value_check(e, 0.3, 0.4, 1).gap, 1e-10);
  double eq = 0.0;
  bool all = true;
  for (int k = 1; k <= 4; ++k) {
    std::vector<BoundaryFunction::Evaluator> d;
    for (int j = 1; j <= k; ++j) {
      double c = 1.0;
      for (int i = 0; i < j; ++i) c *= static_cast<double>(k - i);
      d.push_back([=](complex t) { return c * std::pow(t, k - j); });
    }
    const BoundaryFunction mono([k](complex t) { return std::pow(t, k); }, d);
    const BoundCheck bc = derivative_bound_check(mono, 0.0, 1.0, k, 0);
    all = all && bc.satisfied;
    eq = std::max(eq, std::abs(bc.bound - bc.actual) / bc.bound);
  }
  rows.add("cauchy-inequality/monomial-equality", eq, 1e-12);
  rows.add("cauchy-inequality/satisfied", all ? 0.0 : 1.0, 0.0);
  std::vector<complex> s;
  for (std::size_t j = 0; j < cfg.n; ++j) s.push_back(std::polar(1.0, 2.0 * pi * static_cast<double>(j) / static_cast<double>(cfg.n)));
  rows.add("normalization/e^it", std::abs(normalization_check(s).integral), 1e-12);
  return rows.take();
}

std::vector<CheckRow> hilbert(const SuiteConfig& cfg) {
  Rows rows(cfg);
  std::vector<double> xi;
  for (int i = 0; i <= 40; ++i) xi.push_back(-5.0 + 0.25 * i);
  const RealLineFunction v{[](double x) { return -1.0 / (x * x + 1.0); }, 2.0, 50.0, {}};
  const TransformResult u = hilbert_line(v, xi);
  double e = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) e = std::max(e, std::abs(u.values[i] - xi[i] / (xi[i] * xi[i] + 1.0)));
  rows.add("line/example-pair", e, 5e-6);
  const TransformResult back = hilbert_line_inverse(hilbert_line_function(v), xi);
  e = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) e = std::max(e, std::abs(back.values[i] - v(xi[i])));
  rows.add("line/round-trip", e, 5e-6);
  const TransformResult comp = hilbert_complementary(v, xi);
  e = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) e = std::max(e, std::abs(comp.values[i] + u.values[i]));
  rows.add("line/complementary-negation", e, 1e-12);
  const RealLineFunction s{[](double x) { return std::sin(x); }, 0.0, 50.0, 2.0 * pi};
  const TransformResult hs = hilbert_line(s, xi);
  e = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) e = std::max(e, std::abs(hs.values[i] - std::cos(xi[i])));
  rows.add("line/sin-periodic-route", e, 1e-10);

  const std::size_t n = cfg.n;
  const PeriodicFunction sv = PeriodicFunction::from([](double t) { return std::sin(t); }, n);
  const PeriodicFunction su = hilbert_circular(sv);
  const PeriodicFunction sc = hilbert_circular_complementary(sv);
  double ec = 0.0, en = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    ec = std::max(ec, std::abs(su.samples[j] - std::cos(PeriodicFunction::angle(j, n))));
    en = std::max(en, std::abs(su.samples[j] + sc.samples[j]));
  }
  rows.add("circular/sin-to-cos", ec, 1e-10);
  rows.add("circular/complementary-negation", en, 1e-14);
  double em = 0.0;
  for (int k = 1; k <= 16 && static_cast<std::size_t>(4 * k + 8) <= n; ++k) {
    const auto a = hilbert_circular(PeriodicFunction::from([k](double t) { return std::sin(k * t); }, n));
    const auto b = hilbert_circular(PeriodicFunction::from([k](double t) { return std::cos(k * t); }, n));
    for (std::size_t j = 0; j < n; ++j) {
      const double th = PeriodicFunction::angle(j, n);
      em = std::max({em, std::abs(a.samples[j] - std::cos(k * th)), std::abs(b.samples[j] + std::sin(k * th))});
    }
  }
  rows.add("circular/fourier-modes", em, 1e-9);
  const PeriodicFunction rt_in = PeriodicFunction::from([](double t) { return std::sin(t) + 0.5 * std::sin(2 * t); }, n);
  const PeriodicFunction rt = hilbert_circular_inverse(hilbert_circular(rt_in));
  double er = 0.0;
  for (std::size_t j = 0; j < n; ++j) er = std::max(er, std::abs(rt.samples[j] - rt_in.samples[j]));
  rows.add("circular/round-trip", er, 1e-10);
  const PeriodicFunction cu = PeriodicFunction::from([](double t) { return std::cos(t); }, n);
  rows.add("parseval/circle", parseval_circle(cu, sv).gap, 1e-8);
  const RealLineFunction lu{[](double x) { return x / (x * x + 1.0); }, 1.0, 50.0, {}};
  rows.add("parseval/line", parseval_line(lu, v).gap, 1e-5);
  return rows.take();
}

std::vector<CheckRow> plemelj(const SuiteConfig& cfg) {
  Rows rows(cfg);
  const JordanArc L = JordanArc::segment(-1.0, 1.0);
  const QuadratureGrid G = arc_grid();
  const BoundaryFunction g([](complex t) { return 1.0 - t * t; }, {[](complex t) { return -2.0 * t; }});
  auto pv_exact = [](double x) { return (1.0 - x * x) * std::log((1.0 - x) / (1.0 + x)) - 2.0 * x; };
  double jump = 0.0, sum = 0.0;
  for (int k = 0; k < 16; ++k) {
    const double x = -0.9 + 1.8 * k / 15.0;
    const auto [p, m] = plemelj_limits(g, L, G, x);
    jump = std::max(jump, std::abs(p.value - m.value - g(x)));
    sum = std::max(sum, std::abs(p.value + m.value - pv_exact(x) / (pi * I)));
  }
  rows.add("jump/1-t^2", jump, 1e-8);
  rows.add("sum/1-t^2", sum, 1e-8);
  double rec = 0.0;
  for (int k = 0; k < 20; ++k) {
    const complex z = std::polar(1.3 + 0.1 * (k % 4), 2.0 * pi * k / 20.0 + 0.1);
    const complex zc(z.real(), z.imag());
    const complex exact = ((1.0 - zc * zc) * std::log((zc - 1.0) / (zc + 1.0)) - 2.0 * zc) / (2.0 * pi * I);
    rec = std::max(rec, std::abs(reconstruct_from_jump(g, L, G, z).value - exact));
  }
  rows.add("reconstruction/1-t^2", rec, 1e-8);
  const TwoVariableDensity dens[] = {
      [](double, double) { return complex(1.0); },
      [](double t, double tp) { return complex(t * tp); },
      [](double t, double tp) { return complex(t * t + tp * tp); },
  };
  const char* names[] = {"1", "t*t'", "t^2+t'^2"};
  for (int i = 0; i < 3; ++i) {
    const PoincareBertrandReport r = poincare_bertrand_residual(dens[i], -1.0, 1.0, 0.2);
    rows.add(std::string("poincare-bertrand/") + names[i], r.slow_convergence ? 1.0 : r.residual, 1e-5);
  }
  const double big = 1e3;
  const complex zbig(big, 0.3 * big);
  const complex mass = 2.0 - 2.0 / 3.0;
  rows.add("decay/residue",
           std::abs(zbig * arc_cauchy_integral(g, L, G, zbig).value + mass / (2.0 * pi * I)) /
               std::abs(mass / (2.0 * pi * I)),
           1e-4);
  return rows.take();
}

std::vector<CheckRow> direct_problem(const SuiteConfig& cfg) {
  Rows rows(cfg);
  const auto [C, G] = build_unit_circle(cfg.n);
  std::vector<complex> ext;
  for (std::size_t k = 0; k < 50; ++k) ext.push_back(std::polar(1.1 + 0.09 * static_cast<double>(k % 10), 0.41 * static_cast<double>(k) + 0.05));
  std::vector<complex> between;
  for (std::size_t k = 0; k < 20; ++k) between.push_back(std::polar(1.2 + 0.6 * static_cast<double>(k % 5) / 4.0, 2.0 * pi * static_cast<double>(k) / 20.0 + 0.1));
  std::vector<complex> in;
  for (std::size_t k = 0; k < 40; ++k) in.push_back(std::polar(0.9 * static_cast<double>(k + 1) / 40.0, 0.83 * static_cast<double>(k)));
  const std::pair<const char*, SingularityPrescription> ps[] = {
      {"pole", SingularityPrescription::pole(2.0)},
      {"branch", SingularityPrescription::algebraic(2.0, -0.5)},
      {"constant", SingularityPrescription::constant(1.0)},
  };
  for (const auto& [name, p] : ps) {
    rows.add(std::string("annihilation/") + name, exterior_annihilation_check(p, C, G, ext, 2), 1e-9);
    rows.add(std::string("reproduction/") + name, interior_reproduction_check(p, C, G, in, 2), 1e-9);
  }
  rows.add("annihilation/branch/between-circle-and-cut",
           exterior_annihilation_check(SingularityPrescription::algebraic(2.0, -0.5), C, G, between, 0), 1e-8);
  std::vector<complex> samples;
  const BoundaryFunction f = pole_two();
  for (std::size_t j = 0; j < cfg.n; ++j) samples.push_back(f(std::polar(1.0, 2.0 * pi * static_cast<double>(j) / static_cast<double>(cfg.n))));
  const TaylorCoefficients tc = taylor_coefficients(samples, std::min<std::size_t>(40, cfg.n / 2 - 1));
  double ce = 0.0;
  for (std::size_t n = 0; n < tc.c.size(); ++n) ce = std::max(ce, std::abs(tc.c[n] + std::pow(2.0, -static_cast<double>(n + 1))));
  rows.add("taylor/pole", ce, 1e-14);
  const RadiusEstimate re = singularity_radius_estimate(tc.c);
  rows.add("radius/pole", std::abs(re.rate * 2.0 - 1.0), 0.02);
  const ProbeReport pr = probe_boundary_samples(samples);
  const double loc = pr.locations.size() == 1 ? std::abs(pr.locations[0] - 2.0) / 2.0 : 1.0;
  rows.add("probe/pole", loc, 1e-4);
  return rows.take();
}

using SuiteFn = std::function<std::vector<CheckRow>(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"boundary-relations", boundary_relations}, {"convergence", convergence},
      {"integral-theorems", integral_theorems},   {"hilbert", hilbert},
      {"plemelj", plemelj},                       {"direct-problem", direct_problem},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

std::vector<CheckRow> run_suite(const std::string& name, const SuiteConfig& cfg) {
  for (const auto& [k, fn] : registry()) {
    if (k == name) return fn(cfg);
  }
  throw Error(ErrorCode::UsageError, "unknown suite '" + name + "'");
}

}  // namespace cauchy::cli
