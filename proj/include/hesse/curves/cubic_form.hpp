#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/homogeneous.hpp"
#include "hesse/algebra/qsqrt3.hpp"

namespace hesse {

template <class T>
using BasicCubicForm = HomogForm<T, 3>;

/// Ternary cubic with exact rational coefficients.
using CubicForm = BasicCubicForm<BigRational>;
using RealCubicForm = BasicCubicForm<double>;

/// Monomial keys used in text and JSON, in storage order.
inline const std::array<std::string, 10>& cubic_monomial_keys() {
  static const std::array<std::string, 10> keys = {"x3", "x2y", "x2z", "xy2", "xyz", "xz2", "y3", "y2z", "yz2", "z3"};
  return keys;
}

/// Point of the real projective plane.
struct ProjPoint {
  std::array<double, 3> x{0.0, 0.0, 1.0};

  ProjPoint() = default;
  ProjPoint(double a, double b, double c) : x{a, b, c} {
    if (a == 0.0 && b == 0.0 && c == 0.0) throw Error(ErrorKind::InvalidArgument, "projective point (0:0:0)");
  }

  double operator[](std::size_t i) const { return x[i]; }

  /// Representative with largest-magnitude coordinate equal to 1.
  std::array<double, 3> normalized() const {
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(x[i]) > std::abs(x[k])) k = i;
    }
    return {x[0] / x[k], x[1] / x[k], x[2] / x[k]};
  }

  /// Equality up to scale: both are divided by the coordinate that is
  /// largest in this point, then compared to tol.
  bool same_as(const ProjPoint& o, double tol = 1e-9) const {
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(x[i]) > std::abs(x[k])) k = i;
    }
    if (std::abs(o.x[k]) <= tol * std::max({std::abs(o.x[0]), std::abs(o.x[1]), std::abs(o.x[2])})) return false;
    for (std::size_t i = 0; i < 3; ++i) {
      if (std::abs(x[i] / x[k] - o.x[i] / o.x[k]) > tol) return false;
    }
    return true;
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.same_as(b); }
};

template <class T>
BasicCubicForm<T> cubic_from_coeffs(const std::array<T, 10>& c) {
  return BasicCubicForm<T>(c);
}

/// x^3 + y^3 + z^3 + c xyz.
template <class T>
BasicCubicForm<T> gamma_c(const T& c) {
  BasicCubicForm<T> f;
  f.at(3, 0, 0) = T(1);
  f.at(0, 3, 0) = T(1);
  f.at(0, 0, 3) = T(1);
  f.at(1, 1, 1) = c;
  return f;
}

/// xyz, the degenerate member at c = infinity.
template <class T>
BasicCubicForm<T> gamma_infinity() {
  BasicCubicForm<T> f;
  f.at(1, 1, 1) = T(1);
  return f;
}

/// a x^3 + 3 x y^2 + 3 b x^2 z - b^2 z^3.
template <class T>
BasicCubicForm<T> gamma_ab(const T& a, const T& b) {
  BasicCubicForm<T> f;
  f.at(3, 0, 0) = a;
  f.at(1, 2, 0) = T(3);
  f.at(2, 0, 1) = T(3) * b;
  f.at(0, 0, 3) = -(b * b);
  return f;
}

/// y^2 z - x^3 - a x^2 z - b x z^2, the projective closure of y^2 = x^3 + a x^2 + b x.
template <class T>
BasicCubicForm<T> e_ab_form(const T& a, const T& b) {
  BasicCubicForm<T> f;
  f.at(0, 2, 1) = T(1);
  f.at(3, 0, 0) = T(-1);
  f.at(2, 0, 1) = -a;
  f.at(1, 0, 2) = -b;
  return f;
}

/// Primitive integer representative with first nonzero coefficient positive.
inline CubicForm normalize(const CubicForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero cubic form");
  BigInt l = 1, g = 0;
  for (const auto& q : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::array<BigInt, 10> z;
  for (std::size_t i = 0; i < 10; ++i) {
    BigRational s = f[i] * l;
    z[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  for (const auto& v : z) {
    if (v != 0) {
      if (v < 0) g = -g;
      break;
    }
  }
  CubicForm r;
  for (std::size_t i = 0; i < 10; ++i) r[i] = BigRational(z[i] / g);
  return r;
}

/// Scales so that the first nonzero coefficient is 1 (field coefficients).
template <class T>
BasicCubicForm<T> normalize_first(const BasicCubicForm<T>& f) {
  for (std::size_t i = 0; i < 10; ++i) {
    if (!(f[i] == T(0))) {
      BasicCubicForm<T> r;
      for (std::size_t j = 0; j < 10; ++j) r[j] = f[j] / f[i];
      return r;
    }
  }
  throw Error(ErrorKind::ZeroPolynomial, "zero cubic form");
}

/// Real form scaled to unit max-norm with first nonzero coefficient positive.
inline RealCubicForm normalize(const RealCubicForm& f) {
  double m = 0.0;
  for (double v : f.coeffs()) m = std::max(m, std::abs(v));
  if (m == 0.0) throw Error(ErrorKind::ZeroPolynomial, "zero cubic form");
  double s = 1.0 / m;
  for (double v : f.coeffs()) {
    if (std::abs(v) > 1e-14 * m) {
      if (v < 0) s = -s;
      break;
    }
  }
  RealCubicForm r;
  for (std::size_t i = 0; i < 10; ++i) r[i] = f[i] * s;
  return r;
}

template <class T>
RealCubicForm to_real(const BasicCubicForm<T>& f) {
  return f.template map<double>([](const T& v) { return scalar_cast<double>(v); });
}

/// Largest coefficient difference after both forms are scaled to unit
/// max-norm with matching sign; 0 means proportional.
inline double proportionality_residual(const RealCubicForm& f, const RealCubicForm& g) {
  const RealCubicForm a = normalize(f), b = normalize(g);
  double r = 0.0;
  for (std::size_t i = 0; i < 10; ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

/// Exact proportionality test over an ordered field.
template <class T>
bool proportional(const BasicCubicForm<T>& f, const BasicCubicForm<T>& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return normalize_first(f) == normalize_first(g);
}

/// Gradient evaluated at a point.
template <class T, class S>
std::array<S, 3> gradient(const BasicCubicForm<T>& f, const S& x, const S& y, const S& z) {
  return {f.partial(0)(x, y, z), f.partial(1)(x, y, z), f.partial(2)(x, y, z)};
}

template <class T>
std::string to_string(const BasicCubicForm<T>& f) {
  std::string s;
  for (std::size_t i = 0; i < 10; ++i) {
    if (f[i] == T(0)) continue;
    std::string c;
    if constexpr (std::is_same_v<T, BigRational>) {
      c = hesse::to_string(f[i]);
    } else if constexpr (std::is_same_v<T, QSqrt3>) {
      c = "(" + f[i].to_string() + ")";
    } else {
      c = std::to_string(f[i]);
    }
    if (!s.empty()) s += " + ";
    s += c + "*" + cubic_monomial_keys()[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace hesse
