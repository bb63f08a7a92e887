#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "hesse/algebra/cubic.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/homogeneous.hpp"
#include "hesse/curves/cubic_form.hpp"

namespace hesse {

struct IntersectionPoint {
  ProjPoint point;
  int multiplicity = 1;
  bool tangent() const { return multiplicity >= 2; }
};

/// Points of f = 0 on a line. Real points are listed with multiplicity;
/// non-real ones are kept separately (as complex homogeneous triples) and
/// flagged, since callers work over the reals.
struct LineIntersection {
  std::vector<IntersectionPoint> points;
  std::vector<std::array<Complex, 3>> complex_points;
  bool has_complex = false;

  int total_multiplicity() const {
    int m = static_cast<int>(complex_points.size());
    for (const auto& p : points) m += p.multiplicity;
    return m;
  }
};

namespace detail {

/// Roots of c[0] + c[1] u + ... + c[d] u^d for d <= 3 (c[d] != 0).
inline std::vector<Complex> small_poly_roots(const std::vector<Complex>& c) {
  const std::size_t d = c.size() - 1;
  if (d == 0) return {};
  if (d == 1) return {-c[0] / c[1]};
  if (d == 2) {
    const Complex disc = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
    const Complex s = (std::real(std::conj(c[1]) * disc) >= 0) ? -(c[1] + disc) : -(c[1] - disc);
    if (std::abs(s) == 0.0) return {Complex(0.0), Complex(0.0)};
    return {s / (2.0 * c[2]), 2.0 * c[0] / s};
  }
  auto r = solve_cubic(c[3], c[2], c[1], c[0]);
  return {r[0], r[1], r[2]};
}

}  // namespace detail

/// Restricts f to the line l, solves the binary cubic, and groups the roots
/// by proximity (relative 1e-6) to get multiplicities; multiplicity 2 or 3
/// marks tangency. Throws LineIsComponent when the restriction vanishes.
template <class T>
LineIntersection line_cubic_intersection(const BasicCubicForm<T>& f, const LinearForm3<T>& l, double cluster_tol = 1e-6) {
  std::array<T, 3> lc{l.at(1, 0, 0), l.at(0, 1, 0), l.at(0, 0, 1)};
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(scalar_cast<double>(lc[i])) > std::abs(scalar_cast<double>(lc[k]))) k = i;
  }
  if (lc[k] == T(0)) throw Error(ErrorKind::InvalidArgument, "zero line");
  // Two points spanning the line: e_i l_k - e_k l_i for the two i != k.
  std::array<std::array<T, 3>, 2> basis;
  int slot = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == k) continue;
    std::array<T, 3> v{T(0), T(0), T(0)};
    v[i] = lc[k];
    v[k] = -lc[i];
    basis[slot++] = v;
  }
  const auto& A = basis[0];
  const auto& B = basis[1];
  auto g = [&](int s, int t) {
    const T p0 = T(s) * A[0] + T(t) * B[0], p1 = T(s) * A[1] + T(t) * B[1], p2 = T(s) * A[2] + T(t) * B[2];
    return f(p0, p1, p2);
  };
  // g(s, t) = c3 s^3 + c2 s^2 t + c1 s t^2 + c0 t^3.
  const T c3 = g(1, 0), c0 = g(0, 1), gp = g(1, 1), gm = g(1, -1);
  const T sum = gp - c3 - c0;   // c2 + c1
  const T diff = gm - c3 + c0;  // c1 - c2
  const T c1 = (sum + diff) / T(2);
  const T c2 = (sum - diff) / T(2);
  std::array<double, 4> cd{scalar_cast<double>(c0), scalar_cast<double>(c1), scalar_cast<double>(c2), scalar_cast<double>(c3)};
  double cmax = 0.0;
  for (double v : cd) cmax = std::max(cmax, std::abs(v));
  if (cmax == 0.0) throw Error(ErrorKind::LineIsComponent, "line is a component of the curve");

  // Roots in u = s/t; leading zeros of the s-degree are roots at t = 0.
  int at_infinity = 0;
  int deg = 3;
  while (deg > 0 && std::abs(cd[deg]) <= 1e-13 * cmax) {
    ++at_infinity;
    --deg;
  }
  std::vector<Complex> poly(cd.begin(), cd.begin() + deg + 1);
  std::vector<Complex> us = detail::small_poly_roots(poly);

  std::array<double, 3> a{scalar_cast<double>(A[0]), scalar_cast<double>(A[1]), scalar_cast<double>(A[2])};
  std::array<double, 3> b{scalar_cast<double>(B[0]), scalar_cast<double>(B[1]), scalar_cast<double>(B[2])};

  LineIntersection out;
  struct Root {
    Complex u;
    bool inf;
  };
  std::vector<Root> all;
  for (int i = 0; i < at_infinity; ++i) all.push_back({Complex(0.0), true});
  for (const auto& u : us) all.push_back({u, false});
  std::vector<bool> used(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    int mult = 1;
    Complex sum = all[i].u;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (used[j] || all[j].inf != all[i].inf) continue;
      if (all[i].inf || std::abs(all[j].u - all[i].u) <= cluster_tol * std::max(1.0, std::abs(all[i].u))) {
        used[j] = true;
        ++mult;
        sum += all[j].u;
      }
    }
    if (all[i].inf) {
      out.points.push_back({ProjPoint(a[0], a[1], a[2]), mult});
      continue;
    }
    // A split double root comes back as a nearby pair (possibly a
    // conjugate pair); the cluster mean is the better estimate.
    const Complex u = sum / static_cast<double>(mult);
    if (std::abs(u.imag()) > 1e-9 * std::max(1.0, std::abs(u))) {
      out.has_complex = true;
      for (int m = 0; m < mult; ++m) {
        out.complex_points.push_back({u * a[0] + b[0], u * a[1] + b[1], u * a[2] + b[2]});
      }
      continue;
    }
    const double ur = u.real();
    out.points.push_back({ProjPoint(ur * a[0] + b[0], ur * a[1] + b[1], ur * a[2] + b[2]), mult});
  }
  return out;
}

}  // namespace hesse
