#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/cubic.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/rational_map.hpp"
#include "hesse/dynamics/extended_param.hpp"

namespace hesse {

/// h(x) = (a + x^3) / (b x^2). phi = cbrt(a / (b - 1)) is its real fixed
/// point and kappa = cbrt(2a) its nonzero critical point.
struct HMapParams {
  BigRational a{108};
  BigRational b{-3};

  HMapParams() = default;
  HMapParams(BigRational a_, BigRational b_) : a(std::move(a_)), b(std::move(b_)) {
    if (b == 0) throw Error(ErrorKind::InvalidArgument, "b = 0");
    if (b == 1) throw Error(ErrorKind::InvalidArgument, "b = 1 leaves phi undefined");
  }

  std::optional<BigRational> phi_exact() const { return exact_cbrt(a / (b - 1)); }
  std::optional<BigRational> kappa_exact() const { return exact_cbrt(2 * a); }
  double phi() const { return std::cbrt(to_double(a / (b - 1))); }
  double kappa() const { return std::cbrt(to_double(2 * a)); }
  double ad() const { return to_double(a); }
  double bd() const { return to_double(b); }

  RationalMap1 map() const { return RationalMap1::hesse_h(a, b); }
};

inline double h_eval(const HMapParams& p, double x) {
  if (x == 0.0) throw Error(ErrorKind::PoleAtZero, "h has a pole at 0");
  return (p.ad() + x * x * x) / (p.bd() * x * x);
}

inline BigRational h_eval(const HMapParams& p, const BigRational& x) {
  if (x == 0) throw Error(ErrorKind::PoleAtZero, "h has a pole at 0");
  return (p.a + x * x * x) / (p.b * x * x);
}

/// h iterated n times in floating point; returns +-inf once 0 is hit.
inline double h_iterate(const HMapParams& p, double x, int n) {
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(x)) return x;
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    x = h_eval(p, x);
  }
  return x;
}

struct Preimage {
  double x;
  int multiplicity;
};

/// Real solutions of h(x) = y, i.e. of x^3 - b y x^2 + a = 0, grouped by
/// multiplicity and sorted.
inline std::vector<Preimage> preimages(const HMapParams& p, double y) {
  const auto roots = solve_cubic(1.0, -p.bd() * y, 0.0, p.ad());
  std::vector<double> real;
  for (const auto& r : roots) {
    if (std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r))) real.push_back(r.real());
  }
  std::sort(real.begin(), real.end());
  std::vector<Preimage> out;
  for (double x : real) {
    if (!out.empty() && std::abs(out.back().x - x) <= 1e-6 * std::max(1.0, std::abs(x))) {
      auto& last = out.back();
      last.x = (last.x * last.multiplicity + x) / (last.multiplicity + 1);
      ++last.multiplicity;
    } else {
      out.push_back({x, 1});
    }
  }
  // Newton polish of simple roots on the cubic itself.
  for (auto& pre : out) {
    if (pre.multiplicity > 1) continue;
    for (int it = 0; it < 3; ++it) {
      const double x = pre.x;
      const double f = (x - p.bd() * y) * x * x + p.ad();
      const double d = 3 * x * x - 2 * p.bd() * y * x;
      if (d == 0.0) break;
      pre.x = x - f / d;
    }
  }
  return out;
}

/// The Hesse-derivative parameter map c -> -(108 + c^3) / (3 c^2), with
/// 0 -> inf and inf -> inf. Exact on rationals.
inline ExtendedParam step(const ExtendedParam& c) {
  if (c.is_infinite()) return c;
  if (c.is_rational()) {
    const BigRational& q = c.rational();
    if (q == 0) return ExtendedParam::infinity();
    return ExtendedParam(BigRational(-(108 + q * q * q) / (3 * q * q)));
  }
  const double x = c.real();
  if (x == 0.0) return ExtendedParam::infinity();
  return ExtendedParam(-(108.0 + x * x * x) / (3.0 * x * x));
}

inline double step(double x) {
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  if (!std::isfinite(x)) return x;
  return -(108.0 + x * x * x) / (3.0 * x * x);
}

}  // namespace hesse
