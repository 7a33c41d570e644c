#include "cauchy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/FFT>

namespace cauchy {

std::vector<complex> dft(const std::vector<complex>& x) {
  std::vector<complex> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, x);
  return out;
}

std::vector<complex> idft(const std::vector<complex>& X) {
  std::vector<complex> out;
  Eigen::FFT<double> fft;
  fft.inv(out, X);
  return out;
}

namespace {

// Signed wavenumber of DFT slot k.
long wavenumber(std::size_t k, std::size_t n) {
  const long kk = static_cast<long>(k);
  const long nn = static_cast<long>(n);
  return kk <= nn / 2 ? kk : kk - nn;
}

}  // namespace

std::vector<complex> periodic_derivative(const std::vector<complex>& samples, int order,
                                         double period) {
  const std::size_t n = samples.size();
  if (order == 0 || n == 0) return samples;
  std::vector<complex> c = dft(samples);
  double cmax = 0.0;
  for (const auto& v : c) cmax = std::max(cmax, std::abs(v));
  const double scale = 2.0 * pi / period;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(c[k]) < 1e-14 * cmax) {
      c[k] = 0.0;
      continue;
    }
    const long w = wavenumber(k, n);
    if (n % 2 == 0 && static_cast<std::size_t>(std::labs(w)) * 2 == n) {
      if (order % 2 == 1) {
        c[k] = 0.0;
        continue;
      }
    }
    c[k] *= std::pow(complex(0.0, scale * static_cast<double>(w)), order);
  }
  return idft(c);
}

std::vector<double> periodic_derivative(const std::vector<double>& samples, int order,
                                        double period) {
  std::vector<complex> c(samples.begin(), samples.end());
  const auto d = periodic_derivative(c, order, period);
  std::vector<double> out(d.size());
  std::transform(d.begin(), d.end(), out.begin(), [](complex v) { return v.real(); });
  return out;
}

std::vector<complex> contour_derivative(const std::vector<complex>& f,
                                        const std::vector<complex>& dz, int order) {
  std::vector<complex> g = f;
  for (int k = 0; k < order; ++k) {
    g = periodic_derivative(g, 1);
    for (std::size_t j = 0; j < g.size(); ++j) g[j] /= dz[j];
  }
  return g;
}

TrigInterpolant::TrigInterpolant(const std::vector<complex>& samples, double lower, double period)
    : coeffs_(dft(samples)), lower_(lower), period_(period) {
  const double inv = 1.0 / static_cast<double>(coeffs_.size());
  for (auto& c : coeffs_) c *= inv;
}

complex TrigInterpolant::operator()(double s) const {
  const std::size_t n = coeffs_.size();
  const double x = 2.0 * pi * (s - lower_) / period_;
  complex acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const long w = wavenumber(k, n);
    if (n % 2 == 0 && static_cast<std::size_t>(std::labs(w)) * 2 == n) {
      acc += coeffs_[k] * std::cos(static_cast<double>(w) * x);
    } else {
      acc += coeffs_[k] * std::polar(1.0, static_cast<double>(w) * x);
    }
  }
  return acc;
}

}  // namespace cauchy
