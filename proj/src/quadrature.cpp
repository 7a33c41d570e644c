#include "cauchy/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace cauchy {

double QuadratureGrid::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

QuadratureGrid periodic_trapezoid(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGrid, "periodic rule needs at least one node");
  QuadratureGrid g;
  g.kind = RuleKind::PeriodicTrapezoid;
  g.lower = 0.0;
  g.upper = 2.0 * pi;
  g.nodes.resize(n);
  g.weights.assign(n, 2.0 * pi / static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) g.nodes[j] = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
  return g;
}

// Golub–Welsch: eigenvalues of the Jacobi matrix are the nodes, the squared
// first eigenvector components times mu0 = 2 are the weights.
QuadratureGrid gauss_legendre(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGrid, "Gauss–Legendre rule needs at least one node");
  QuadratureGrid g;
  g.kind = RuleKind::GaussLegendrePanels;
  g.lower = -1.0;
  g.upper = 1.0;
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index k = 1; k < m; ++k) {
    const double kk = static_cast<double>(k);
    const double b = kk / std::sqrt(4.0 * kk * kk - 1.0);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  g.nodes.resize(n);
  g.weights.resize(n);
  for (Eigen::Index k = 0; k < m; ++k) {
    g.nodes[k] = es.eigenvalues()(k);
    const double v = es.eigenvectors()(0, k);
    g.weights[k] = 2.0 * v * v;
  }
  // symmetrize to remove eigen-solver noise
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t r = n - 1 - k;
    const double x = 0.5 * (g.nodes[r] - g.nodes[k]);
    const double w = 0.5 * (g.weights[r] + g.weights[k]);
    g.nodes[k] = -x;
    g.nodes[r] = x;
    g.weights[k] = g.weights[r] = w;
  }
  if (n % 2 == 1) g.nodes[n / 2] = 0.0;
  return g;
}

QuadratureGrid mapped(const QuadratureGrid& ref, double a, double b) {
  QuadratureGrid g = ref;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (std::size_t j = 0; j < g.size(); ++j) {
    g.nodes[j] = mid + half * ref.nodes[j];
    g.weights[j] = half * ref.weights[j];
  }
  g.lower = a;
  g.upper = b;
  return g;
}

QuadratureGrid gauss_legendre_panels(const std::vector<double>& breaks, std::size_t order) {
  if (breaks.size() < 2) throw Error(ErrorCode::InvalidGrid, "panel rule needs two breakpoints");
  if (!std::is_sorted(breaks.begin(), breaks.end())) {
    throw Error(ErrorCode::InvalidGrid, "panel breakpoints must be increasing");
  }
  const QuadratureGrid ref = gauss_legendre(order);
  QuadratureGrid g;
  g.kind = RuleKind::GaussLegendrePanels;
  g.lower = breaks.front();
  g.upper = breaks.back();
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    if (breaks[p + 1] == breaks[p]) continue;
    const QuadratureGrid piece = mapped(ref, breaks[p], breaks[p + 1]);
    g.nodes.insert(g.nodes.end(), piece.nodes.begin(), piece.nodes.end());
    g.weights.insert(g.weights.end(), piece.weights.begin(), piece.weights.end());
  }
  return g;
}

QuadratureGrid gauss_legendre_panels(double a, double b, std::size_t panels, std::size_t order) {
  if (panels == 0) throw Error(ErrorCode::InvalidGrid, "panel count must be positive");
  std::vector<double> breaks(panels + 1);
  for (std::size_t p = 0; p <= panels; ++p) {
    breaks[p] = a + (b - a) * static_cast<double>(p) / static_cast<double>(panels);
  }
  breaks.back() = b;
  return gauss_legendre_panels(breaks, order);
}

QuadratureGrid graded_panels(double a, double b, std::size_t levels, std::size_t order) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<double> breaks{a};
  for (std::size_t l = levels; l >= 1; --l) breaks.push_back(a + half * std::ldexp(1.0, -static_cast<int>(l)));
  breaks.push_back(mid);
  for (std::size_t l = 1; l <= levels; ++l) breaks.push_back(b - half * std::ldexp(1.0, -static_cast<int>(l)));
  breaks.push_back(b);
  return gauss_legendre_panels(breaks, order);
}

QuadratureGrid gauss_chebyshev(std::size_t n, ChebyshevWeight weight) {
  if (n == 0) throw Error(ErrorCode::InvalidGrid, "Gauss–Chebyshev rule needs at least one node");
  QuadratureGrid g;
  g.kind = RuleKind::GaussChebyshev;
  g.weight = weight;
  g.lower = -1.0;
  g.upper = 1.0;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double dn = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double k = static_cast<double>(j + 1);
    switch (weight) {
      case ChebyshevWeight::FirstKind:
        g.nodes[j] = std::cos((2.0 * k - 1.0) * pi / (2.0 * dn));
        g.weights[j] = pi / dn;
        break;
      case ChebyshevWeight::SecondKind: {
        const double th = k * pi / (dn + 1.0);
        g.nodes[j] = std::cos(th);
        g.weights[j] = pi / (dn + 1.0) * std::sin(th) * std::sin(th);
        break;
      }
      case ChebyshevWeight::FourthKind: {
        const double th = 2.0 * k * pi / (2.0 * dn + 1.0);
        const double s = std::sin(k * pi / (2.0 * dn + 1.0));
        g.nodes[j] = std::cos(th);
        g.weights[j] = 4.0 * pi / (2.0 * dn + 1.0) * s * s;
        break;
      }
      case ChebyshevWeight::ThirdKind: {
        const double th = 2.0 * k * pi / (2.0 * dn + 1.0);
        const double s = std::sin(k * pi / (2.0 * dn + 1.0));
        g.nodes[j] = -std::cos(th);
        g.weights[j] = 4.0 * pi / (2.0 * dn + 1.0) * s * s;
        break;
      }
      case ChebyshevWeight::Plain: {
        // Fejér's first rule on the first-kind points
        const double th = (2.0 * k - 1.0) * pi / (2.0 * dn);
        double acc = 0.0;
        for (std::size_t l = 1; l <= n / 2; ++l) {
          const double dl = static_cast<double>(l);
          acc += std::cos(2.0 * dl * th) / (4.0 * dl * dl - 1.0);
        }
        g.nodes[j] = std::cos(th);
        g.weights[j] = 2.0 / dn * (1.0 - 2.0 * acc);
        break;
      }
    }
  }
  // ascending order keeps downstream tables readable
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return g.nodes[a] < g.nodes[b]; });
  QuadratureGrid s = g;
  for (std::size_t j = 0; j < n; ++j) {
    s.nodes[j] = g.nodes[idx[j]];
    s.weights[j] = g.weights[idx[j]];
  }
  return s;
}

}  // namespace cauchy
