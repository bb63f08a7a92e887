#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include "hesse/algebra/cubic.hpp"
#include "hesse/algebra/errors.hpp"

namespace hesse {

/// Affine point of y^2 = x^3 + a x^2 + b x, or the point at infinity.
struct EPoint {
  bool infinite = true;
  Complex x{0.0};
  Complex y{0.0};

  static EPoint infinity() { return {}; }
  static EPoint affine(Complex x, Complex y) { return {false, x, y}; }
};

/// The curve y^2 = x^3 + a x^2 + b x = x (x - e1)(x - e2) over C.
class EabCurve {
 public:
  EabCurve(Complex a, Complex b) : a_(a), b_(b) {
    if (std::abs(b) == 0.0) throw Error(ErrorKind::SingularInput, "b = 0: the curve is singular at the origin");
    const Complex d = a * a - 4.0 * b;
    if (std::abs(d) <= 1e-14 * std::max(1.0, std::norm(a))) throw Error(ErrorKind::SingularInput, "a^2 = 4b: e1 = e2");
    const Complex s = std::sqrt(d);
    e1_ = (-a + s) / 2.0;
    e2_ = (-a - s) / 2.0;
  }

  const Complex& a() const { return a_; }
  const Complex& b() const { return b_; }
  const Complex& e1() const { return e1_; }
  const Complex& e2() const { return e2_; }

  /// x^3 + a x^2 + b x.
  Complex rhs(const Complex& x) const { return ((x + a_) * x + b_) * x; }

  /// Point with the given x and y = sqrt(rhs(x)) (principal branch), negated if sign < 0.
  EPoint point_at(Complex x, int sign = 1) const {
    Complex y = std::sqrt(rhs(x));
    return EPoint::affine(x, sign < 0 ? -y : y);
  }

 private:
  Complex a_, b_, e1_, e2_;
};

inline bool on_curve(const EabCurve& c, const EPoint& p, double tol = 1e-8) {
  if (p.infinite) return true;
  const double scale = std::max(1.0, std::pow(std::abs(p.x), 3));
  return std::abs(p.y * p.y - c.rhs(p.x)) <= tol * scale;
}

inline EPoint negate(const EabCurve&, const EPoint& p) {
  if (p.infinite) return p;
  return EPoint::affine(p.x, -p.y);
}

namespace detail {

inline bool close(const Complex& u, const Complex& v, double rel = 1e-12) {
  return std::abs(u - v) <= rel * std::max({1.0, std::abs(u), std::abs(v)});
}

}  // namespace detail

/// Chord-tangent addition with the point at infinity as identity.
inline EPoint add(const EabCurve& c, const EPoint& p, const EPoint& q) {
  if (p.infinite) return q;
  if (q.infinite) return p;
  Complex lambda;
  if (detail::close(p.x, q.x)) {
    if (detail::close(p.y, -q.y)) return EPoint::infinity();
    lambda = (3.0 * p.x * p.x + 2.0 * c.a() * p.x + c.b()) / (2.0 * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  const Complex x3 = lambda * lambda - c.a() - p.x - q.x;
  const Complex y3 = lambda * (p.x - x3) - p.y;
  return EPoint::affine(x3, y3);
}

/// 2P from the closed forms
///   x(2P) = (x^2 - b)^2 / (4 y^2),
///   y(2P) = (x^2 - e1e2)(e1e2 - 2e1x + x^2)(e1e2 - 2e2x + x^2) / (8 y^3).
inline EPoint double_point(const EabCurve& c, const EPoint& p) {
  if (p.infinite) return p;
  if (std::abs(p.y) <= 1e-14 * std::max(1.0, std::abs(p.x))) return EPoint::infinity();
  const Complex x = p.x, y = p.y, b = c.b(), e1 = c.e1(), e2 = c.e2();
  const Complex x2 = x * x;
  const Complex xd = (x2 - b) * (x2 - b) / (4.0 * y * y);
  const Complex yd = (x2 - b) * (b - 2.0 * e1 * x + x2) * (b - 2.0 * e2 * x + x2) / (8.0 * y * y * y);
  return EPoint::affine(xd, yd);
}

/// gamma = sqrt(x0), alpha = sqrt(x0 - e1), beta = sqrt(x0 - e2), principal branches.
struct HalvingRadicals {
  Complex gamma, alpha, beta;
};

inline HalvingRadicals halving_radicals(const EabCurve& c, const EPoint& p) {
  if (p.infinite) throw Error(ErrorKind::InvalidArgument, "halving radicals need an affine point");
  return {std::sqrt(p.x), std::sqrt(p.x - c.e1()), std::sqrt(p.x - c.e2())};
}

/// x-coordinates (alpha+gamma)(beta+gamma), (alpha-gamma)(beta-gamma),
/// (alpha+gamma)(-beta+gamma), (alpha-gamma)(-beta-gamma).
inline std::array<Complex, 4> halving_x(const HalvingRadicals& r) {
  const Complex g = r.gamma, a = r.alpha, b = r.beta;
  return {(a + g) * (b + g), (a - g) * (b - g), (a + g) * (-b + g), (a - g) * (-b - g)};
}

/// Coefficients (x^0 .. x^4) of (x^2 - b)^2 - 4 x0 x (x^2 + a x + b), whose
/// roots are the x-coordinates of the points Q with x(2Q) = x0.
inline std::array<Complex, 5> halving_quartic(const EabCurve& c, const Complex& x0) {
  const Complex a = c.a(), b = c.b();
  return {b * b, -4.0 * x0 * b, -2.0 * b - 4.0 * x0 * a, -4.0 * x0, Complex(1.0)};
}

/// The four points Q with 2Q = -P. The y sign of each is the one for which
/// double_point(Q) lands closer to -P.
inline std::array<EPoint, 4> halve(const EabCurve& c, const EPoint& p) {
  if (p.infinite) throw Error(ErrorKind::InvalidArgument, "halving the point at infinity is not supported");
  const auto xs = halving_x(halving_radicals(c, p));
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (detail::close(xs[i], xs[j], 1e-9)) {
        throw Error(ErrorKind::SingularInput, "halving x-coordinates collide (x0 is 0, e1 or e2)");
      }
    }
  }
  const EPoint target = negate(c, p);
  std::array<EPoint, 4> out;
  for (int i = 0; i < 4; ++i) {
    EPoint q = c.point_at(xs[i]);
    const EPoint d1 = double_point(c, q);
    const EPoint d2 = double_point(c, negate(c, q));
    auto dist = [&](const EPoint& d) {
      if (d.infinite) return std::numeric_limits<double>::infinity();
      return std::abs(d.x - target.x) + std::abs(d.y - target.y);
    };
    out[i] = dist(d1) <= dist(d2) ? q : negate(c, q);
  }
  return out;
}

}  // namespace hesse
