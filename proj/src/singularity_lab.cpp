#include "cauchy/singularity_lab.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "cauchy/cauchy_core.hpp"
#include "cauchy/spectral.hpp"

namespace cauchy {

namespace {

constexpr int kCatalogOrders = 4;

complex direction_of(const SingularityPrescription& p) {
  const complex d = p.cut_direction ? *p.cut_direction : p.location / std::abs(p.location);
  return d / std::abs(d);
}

// log(t - c) with the cut along c + r d, argument measured from arg(d) in [0, 2 pi)
complex branch_log(complex t, complex c, complex d) {
  double th = std::arg((t - c) / d);
  if (th < 0.0) th += 2.0 * pi;
  return {std::log(std::abs(t - c)), std::arg(d) + th};
}

using Poly = std::vector<complex>;

complex horner(const Poly& p, complex t) {
  complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(static_cast<double>(j) * p[j]);
  return d;
}

std::vector<complex> roots(Poly q) {
  double qmax = 0.0;
  for (const auto& v : q) qmax = std::max(qmax, std::abs(v));
  while (q.size() > 1 && std::abs(q.back()) <= 1e-14 * qmax) q.pop_back();
  const auto d = static_cast<Eigen::Index>(q.size()) - 1;
  if (d < 1) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) C(i, d - 1) = -q[static_cast<std::size_t>(i)] / q.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<complex> r(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  std::sort(r.begin(), r.end(), [](complex a, complex b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : std::arg(a) < std::arg(b);
  });
  return r;
}

double max_abs(const std::vector<complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

SingularityPrescription SingularityPrescription::pole(complex a, int order, complex strength) {
  SingularityPrescription p;
  p.kind = SingularityKind::Pole;
  p.location = a;
  p.order = order;
  p.strength = strength;
  return p;
}

SingularityPrescription SingularityPrescription::algebraic(complex c, double exponent, complex strength) {
  SingularityPrescription p;
  p.kind = SingularityKind::AlgebraicBranch;
  p.location = c;
  p.exponent = exponent;
  p.strength = strength;
  return p;
}

SingularityPrescription SingularityPrescription::logarithmic(complex c, complex strength) {
  SingularityPrescription p;
  p.kind = SingularityKind::LogBranch;
  p.location = c;
  p.strength = strength;
  return p;
}

SingularityPrescription SingularityPrescription::constant(complex value) {
  SingularityPrescription p;
  p.kind = SingularityKind::Constant;
  p.strength = value;
  return p;
}

void SingularityPrescription::validate(double margin) const {
  if (kind == SingularityKind::Constant) return;
  if (!is_finite(location) || !(std::abs(location) > 1.0 + margin)) {
    throw Error(ErrorCode::PrescriptionError, "singularity must lie strictly outside the unit circle");
  }
  if (kind == SingularityKind::Pole && order < 1) {
    throw Error(ErrorCode::PrescriptionError, "pole order must be at least 1");
  }
  if (kind == SingularityKind::AlgebraicBranch || kind == SingularityKind::LogBranch) {
    if (cut_direction && std::abs(*cut_direction) == 0.0) {
      throw Error(ErrorCode::PrescriptionError, "cut direction must be nonzero");
    }
    const complex d = direction_of(*this);
    const double r = std::max(0.0, -std::real(std::conj(d) * location));
    if (!(std::abs(location + r * d) > 1.0 + margin)) {
      throw Error(ErrorCode::PrescriptionError, "branch cut meets the closed unit disk");
    }
  }
}

BoundaryFunction catalog_function(const SingularityPrescription& p) {
  p.validate();
  const complex a = p.location;
  const complex s = p.strength;
  std::vector<BoundaryFunction::Evaluator> d;
  switch (p.kind) {
    case SingularityKind::Constant:
      return BoundaryFunction::constant(s);
    case SingularityKind::Pole: {
      const int m = p.order;
      for (int k = 1; k <= kCatalogOrders; ++k) {
        double coef = 1.0;
        for (int j = 0; j < k; ++j) coef *= -static_cast<double>(m + j);
        d.push_back([=](complex t) { return s * coef / std::pow(t - a, m + k); });
      }
      return BoundaryFunction([=](complex t) { return s / std::pow(t - a, m); }, std::move(d));
    }
    case SingularityKind::AlgebraicBranch: {
      const complex dir = direction_of(p);
      const double e = p.exponent;
      for (int k = 1; k <= kCatalogOrders; ++k) {
        double coef = 1.0;
        for (int j = 0; j < k; ++j) coef *= e - static_cast<double>(j);
        d.push_back([=](complex t) { return s * coef * std::exp((e - k) * branch_log(t, a, dir)); });
      }
      return BoundaryFunction([=](complex t) { return s * std::exp(e * branch_log(t, a, dir)); }, std::move(d));
    }
    case SingularityKind::LogBranch: {
      const complex dir = direction_of(p);
      for (int k = 1; k <= kCatalogOrders; ++k) {
        const double coef = (k % 2 == 1 ? 1.0 : -1.0) * std::tgamma(static_cast<double>(k));
        d.push_back([=](complex t) { return s * coef / std::pow(t - a, k); });
      }
      return BoundaryFunction([=](complex t) { return s * branch_log(t, a, dir); }, std::move(d));
    }
  }
  throw Error(ErrorCode::PrescriptionError, "unknown singularity kind");
}

double exterior_annihilation_check(const SingularityPrescription& p, const ClosedContour& contour,
                                   const QuadratureGrid& grid, const std::vector<complex>& targets,
                                   int n_max) {
  const BoundaryFunction f = catalog_function(p);
  double worst = 0.0;
  for (const complex z : targets) {
    for (int n = 0; n <= n_max; ++n) {
      const FunctionalValue J = cauchy_functional(f, contour, grid, z, n);
      if (J.region != Verdict::Outside) throw Error(ErrorCode::DomainError, "annihilation target is not exterior");
      worst = std::max(worst, std::abs(J.value));
    }
  }
  return worst;
}

double interior_reproduction_check(const SingularityPrescription& p, const ClosedContour& contour,
                                   const QuadratureGrid& grid, const std::vector<complex>& targets,
                                   int n_max) {
  const BoundaryFunction f = catalog_function(p);
  double worst = 0.0;
  for (const complex z : targets) {
    for (int n = 0; n <= n_max; ++n) {
      const FunctionalValue J = cauchy_functional(f, contour, grid, z, n);
      if (J.region != Verdict::Inside) throw Error(ErrorCode::DomainError, "reproduction target is not interior");
      worst = std::max(worst, std::abs(J.value - f.derivative(n, z)));
    }
  }
  return worst;
}

TaylorCoefficients taylor_coefficients(const std::vector<complex>& samples, std::size_t n_max,
                                       double theta0) {
  const std::size_t N = samples.size();
  if (N < 4) throw Error(ErrorCode::ContractViolation, "too few boundary samples for coefficients");
  if (n_max >= N / 2) throw Error(ErrorCode::ContractViolation, "coefficient count exceeds half the sample count");
  const std::vector<complex> X = dft(samples);
  const double inv = 1.0 / static_cast<double>(N);
  TaylorCoefficients tc;
  tc.c.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    tc.c[n] = X[n] * inv * std::polar(1.0, -static_cast<double>(n) * theta0);
  }
  for (std::size_t k = 1; k <= N / 4; ++k) {
    tc.negative_mode = std::max(tc.negative_mode, std::abs(X[N - k]) * inv);
  }
  double scale = 0.0;
  for (const auto& x : X) scale = std::max(scale, std::abs(x) * inv);
  // Aliased positive modes sit below the mid-spectrum level; genuine negative modes do not.
  double floor = 0.0;
  for (std::size_t k = N / 2 - 1; k <= N / 2 + 1; ++k) floor = std::max(floor, std::abs(X[k]) * inv);
  tc.interior_singularity = tc.negative_mode > 1e-8 * std::max(scale, 1e-300) && tc.negative_mode > 10.0 * floor;
  return tc;
}

RadiusEstimate singularity_radius_estimate(const std::vector<complex>& c, std::size_t n_lo,
                                           std::size_t n_hi) {
  RadiusEstimate r;
  std::vector<std::size_t> idx;
  for (std::size_t n = std::max<std::size_t>(n_lo, 1); n <= n_hi && n < c.size(); ++n) {
    if (std::abs(c[n]) > 0.0) idx.push_back(n);
  }
  if (idx.size() < 3) {
    r.radius = std::numeric_limits<double>::infinity();
    return r;
  }
  Eigen::MatrixXd A(static_cast<Eigen::Index>(idx.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double n = static_cast<double>(idx[i]);
    const auto row = static_cast<Eigen::Index>(i);
    A(row, 0) = 1.0;
    A(row, 1) = n;
    A(row, 2) = std::log(n);
    y(row) = std::log(std::abs(c[idx[i]]));
  }
  const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(y);
  r.rate = std::exp(sol(1));
  r.radius = 1.0 / r.rate;
  r.log_exponent = sol(2);
  return r;
}

ProbeReport pade_pole_probe(const std::vector<complex>& coefficients, int m, int k) {
  if (m < 0 || k < 0) throw Error(ErrorCode::ContractViolation, "Pade degrees must be non-negative");
  const auto& c = coefficients;
  if (c.size() < static_cast<std::size_t>(m + k + 1)) {
    throw Error(ErrorCode::ContractViolation, "Pade approximant needs at least m + k + 1 coefficients");
  }
  auto coef = [&](int n) { return n < 0 ? complex{} : c[static_cast<std::size_t>(n)]; };
  ProbeReport rep;
  rep.m = m;
  rep.k = k;
  rep.coefficients = c;
  struct {
    Poly p;
    Poly q;
  } pq;
  pq.q.assign(static_cast<std::size_t>(k) + 1, 0.0);
  pq.q[0] = 1.0;
  if (k > 0) {
    Eigen::MatrixXcd A(k, k);
    Eigen::VectorXcd b(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) A(i, j) = coef(m + i - j);
      b(i) = -coef(m + 1 + i);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    const auto& sv = svd.singularValues();
    rep.singular_value_ratio = sv(0) > 0.0 ? sv(k - 1) / sv(0) : 0.0;
    if (svd.rank() < k) {
      rep.low_confidence = true;
      rep.notes.push_back("Hankel system rank " + std::to_string(svd.rank()) + " of " + std::to_string(k));
    }
    const Eigen::VectorXcd q = sv(0) > 0.0 ? Eigen::VectorXcd(svd.solve(b)) : Eigen::VectorXcd::Zero(k);
    for (int j = 0; j < k; ++j) pq.q[static_cast<std::size_t>(j) + 1] = q(j);
  }
  pq.p.resize(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    complex acc = 0.0;
    for (int j = 0; j <= std::min(n, k); ++j) acc += pq.q[static_cast<std::size_t>(j)] * coef(n - j);
    pq.p[static_cast<std::size_t>(n)] = acc;
  }
  // Taylor series of P/Q against the supplied coefficients
  std::vector<complex> s(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    complex acc = n < pq.p.size() ? pq.p[n] : complex{};
    for (std::size_t j = 1; j < pq.q.size() && j <= n; ++j) acc -= pq.q[j] * s[n - j];
    s[n] = acc;
    rep.coefficient_residual = std::max(rep.coefficient_residual, std::abs(s[n] - c[n]));
  }
  rep.numerator = pq.p;
  rep.denominator = pq.q;
  const std::vector<complex> r = roots(pq.q);
  const Poly dq = derivative(pq.q);
  std::vector<complex> res(r.size());
  double rmax = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    res[i] = horner(pq.p, r[i]) / horner(dq, r[i]);
    rmax = std::max(rmax, std::abs(res[i]));
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (std::abs(res[i]) < 1e-10 * rmax || std::abs(r[i]) <= 1.0 || !is_finite(res[i])) {
      rep.discarded_roots.push_back(r[i]);
      continue;
    }
    rep.locations.push_back(r[i]);
    rep.strengths.push_back(res[i]);
  }
  return rep;
}

namespace {

double held_out_residual(const ProbeReport& r, const std::vector<complex>& samples, double theta0) {
  const std::size_t N = samples.size();
  double worst = 0.0;
  for (std::size_t j = 1; j < N; j += 2) {
    const complex t = std::polar(1.0, theta0 + 2.0 * pi * static_cast<double>(j) / static_cast<double>(N));
    worst = std::max(worst, std::abs(horner(r.numerator, t) / horner(r.denominator, t) - samples[j]));
  }
  return worst;
}

bool poles_match(const ProbeReport& a, const ProbeReport& b) {
  for (const complex p : a.locations) {
    double best = std::numeric_limits<double>::infinity();
    for (const complex q : b.locations) best = std::min(best, std::abs(p - q));
    if (!(best <= 1e-6 * std::abs(p))) return false;
  }
  return true;
}

}  // namespace

ProbeReport probe_boundary_samples(const std::vector<complex>& samples, double theta0,
                                   std::optional<std::pair<int, int>> degrees,
                                   std::size_t coefficient_count) {
  const std::size_t N = samples.size();
  if (N < 32 || N % 2 != 0) throw Error(ErrorCode::ContractViolation, "probe needs an even number of at least 32 samples");
  for (const auto& s : samples) {
    if (!is_finite(s)) throw Error(ErrorCode::NonFiniteResult, "boundary sample is not finite");
  }
  std::vector<complex> even;
  for (std::size_t j = 0; j < N; j += 2) even.push_back(samples[j]);
  const std::size_t count = std::min(coefficient_count, even.size() / 2 - 1);
  const TaylorCoefficients tc = taylor_coefficients(even, count, theta0);
  const double scale = std::max(max_abs(samples), 1e-300);

  auto run = [&](int m, int k) {
    ProbeReport r = pade_pole_probe(tc.c, m, k);
    r.boundary_residual = held_out_residual(r, samples, theta0);
    return r;
  };

  ProbeReport chosen;
  if (degrees) {
    chosen = run(degrees->first, degrees->second);
    const ProbeReport next = run(degrees->first + 1, degrees->second + 1);
    chosen.asserted = chosen.boundary_residual < 1e-9 * scale && poles_match(chosen, next);
  } else {
    std::vector<ProbeReport> reps;
    for (int k = 1; k <= 8; ++k) reps.push_back(run(k - 1, k));
    std::size_t pick = reps.size() - 1;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const double ri = reps[i].boundary_residual;
      if (ri <= 1e-13 * scale) {
        pick = i;
        break;
      }
      if (i + 1 < reps.size() && reps[i + 1].boundary_residual > 0.1 * ri) {
        pick = i;
        break;
      }
    }
    chosen = reps[pick];
    for (const auto& r : reps) chosen.scan.emplace_back(r.k, r.boundary_residual);
    const bool stable = pick + 1 < reps.size() && poles_match(chosen, reps[pick + 1]);
    chosen.asserted = chosen.boundary_residual < 1e-9 * scale && stable;
    if (!stable) chosen.notes.push_back("pole estimates move under a degree increase");
  }
  if (tc.interior_singularity) {
    chosen.notes.push_back("negative Fourier modes present: data not regular inside the circle");
    chosen.asserted = false;
  }
  if (!chosen.asserted) {
    chosen.notes.push_back("candidate not asserted; the singularity may not be a finite set of poles");
  }
  return chosen;
}

}  // namespace cauchy
