#pragma once

#include <cstddef>
#include <vector>

#include "cauchy/types.hpp"

namespace cauchy {

enum class RuleKind { PeriodicTrapezoid, GaussLegendrePanels, GaussChebyshev };

/// Weight carried by a Gauss–Chebyshev rule.
///   FirstKind   1/sqrt(1-x^2)
///   SecondKind  sqrt(1-x^2)
///   ThirdKind   sqrt((1+x)/(1-x))
///   FourthKind  sqrt((1-x)/(1+x))
/// Plain is an unweighted Fejér rule on Chebyshev points.
enum class ChebyshevWeight { Plain, FirstKind, SecondKind, ThirdKind, FourthKind };

struct QuadratureGrid {
  RuleKind kind = RuleKind::PeriodicTrapezoid;
  ChebyshevWeight weight = ChebyshevWeight::Plain;
  std::vector<double> nodes;
  std::vector<double> weights;
  double lower = 0.0;
  double upper = 0.0;

  std::size_t size() const { return nodes.size(); }
  double measure() const { return upper - lower; }
  double weight_sum() const;
};

/// n equispaced nodes s_j = 2 pi j / n on [0, 2 pi), weights 2 pi / n.
QuadratureGrid periodic_trapezoid(std::size_t n);

/// n-point Gauss–Legendre rule on [-1, 1].
QuadratureGrid gauss_legendre(std::size_t n);

/// Composite Gauss–Legendre on [a, b] split at the given breakpoints.
QuadratureGrid gauss_legendre_panels(double a, double b, std::size_t panels,
                                     std::size_t order);
QuadratureGrid gauss_legendre_panels(const std::vector<double>& breaks, std::size_t order);

/// Panels geometrically graded towards both ends of [a, b] (ratio 1/2 per level).
QuadratureGrid graded_panels(double a, double b, std::size_t levels, std::size_t order);

/// Gauss–Chebyshev rule of the given kind on [-1, 1].
QuadratureGrid gauss_chebyshev(std::size_t n, ChebyshevWeight weight);

/// Affine image of a rule defined on [-1, 1] onto [a, b].
QuadratureGrid mapped(const QuadratureGrid& reference, double a, double b);

}  // namespace cauchy
