#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "hesse/algebra/errors.hpp"

namespace hesse {

using Complex = std::complex<double>;

inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace detail {

inline Complex cubic_value(const std::array<Complex, 4>& c, const Complex& t) {
  return ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
}

inline Complex cubic_slope(const std::array<Complex, 4>& c, const Complex& t) {
  return (3.0 * c[3] * t + 2.0 * c[2]) * t + c[1];
}

inline Complex principal_cbrt(const Complex& z) {
  if (z == Complex(0.0, 0.0)) return z;
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

}  // namespace detail

/// Roots (with multiplicity) of c3 t^3 + c2 t^2 + c1 t + c0 by Cardano's
/// formulas, each polished with a few Newton steps. Real coefficients take
/// the trigonometric branch when there are three real roots, and near-zero
/// discriminants are snapped so repeated real roots stay real.
inline std::array<Complex, 3> solve_cubic(Complex c3, Complex c2, Complex c1, Complex c0) {
  if (std::abs(c3) == 0.0) throw Error(ErrorKind::DegenerateLeadingCoefficient, "cubic leading coefficient is zero");
  if (!is_finite(c3) || !is_finite(c2) || !is_finite(c1) || !is_finite(c0)) {
    throw Error(ErrorKind::InvalidArgument, "non-finite cubic coefficient");
  }
  const std::array<Complex, 4> coeffs{c0, c1, c2, c3};
  const Complex A = c2 / c3, B = c1 / c3, C = c0 / c3;
  // t = s - A/3 gives s^3 + p s + q.
  const Complex p = B - A * A / 3.0;
  const Complex q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
  const Complex shift = -A / 3.0;
  std::array<Complex, 3> roots;

  const bool real_coeffs = c3.imag() == 0 && c2.imag() == 0 && c1.imag() == 0 && c0.imag() == 0;
  const double scale = std::max({1.0, std::abs(A), std::sqrt(std::abs(B)), std::cbrt(std::abs(C))});
  if (real_coeffs) {
    const double pr = p.real(), qr = q.real(), sr = shift.real();
    const double disc = qr * qr / 4.0 + pr * pr * pr / 27.0;
    const double snap = 1e-13 * std::pow(scale, 6);
    if (std::abs(disc) <= snap) {
      // Repeated root: s = cbrt(q/2) double, -2 cbrt(q/2) simple.
      const double u = std::cbrt(-qr / 2.0);
      roots = {Complex(sr + 2.0 * u), Complex(sr - u), Complex(sr - u)};
    } else if (disc < 0) {
      const double m = 2.0 * std::sqrt(-pr / 3.0);
      const double arg = std::clamp(3.0 * qr / (pr * m), -1.0, 1.0);
      const double theta = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k) {
        roots[k] = Complex(sr + m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
      }
    } else {
      const double sq = std::sqrt(disc);
      const double w = -qr / 2.0 + (qr <= 0 ? sq : -sq);
      const double u = std::cbrt(w);
      const double v = (u == 0.0) ? 0.0 : -pr / (3.0 * u);
      const double re = -(u + v) / 2.0;
      const double im = std::sqrt(3.0) / 2.0 * (u - v);
      roots = {Complex(sr + u + v), Complex(sr + re, im), Complex(sr + re, -im)};
    }
  } else {
    const Complex disc = q * q / 4.0 + p * p * p / 27.0;
    const Complex sq = std::sqrt(disc);
    Complex w1 = -q / 2.0 + sq, w2 = -q / 2.0 - sq;
    const Complex w = std::abs(w1) >= std::abs(w2) ? w1 : w2;
    const Complex u = detail::principal_cbrt(w);
    const Complex v = (std::abs(u) == 0.0) ? Complex(0.0) : -p / (3.0 * u);
    const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
    const Complex omega2 = std::conj(omega);
    roots = {shift + u + v, shift + omega * u + omega2 * v, shift + omega2 * u + omega * v};
  }

  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const Complex d = detail::cubic_slope(coeffs, r);
      if (std::abs(d) < 1e-14 * std::abs(c3) * scale * scale) break;
      const Complex step = detail::cubic_value(coeffs, r) / d;
      const Complex next = r - step;
      if (!is_finite(next) || std::abs(detail::cubic_value(coeffs, next)) >= std::abs(detail::cubic_value(coeffs, r))) break;
      r = next;
    }
    if (real_coeffs && r.imag() != 0 && std::abs(r.imag()) <= 1e-14 * std::max(1.0, std::abs(r))) r = Complex(r.real());
  }
  return roots;
}

}  // namespace hesse
