#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "hesse/algebra/cubic.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/homogeneous.hpp"
#include "hesse/algebra/qsqrt3.hpp"
#include "hesse/curves/cubic_form.hpp"
#include "hesse/curves/hesse.hpp"

namespace hesse {

/// Parameters linking the Hesse form x^3 + y^3 + z^3 + c xyz to
/// y^2 = x^3 + a x^2 + b x through the auxiliary q.
template <class T>
struct WnfParams {
  T q, c, a, b;
  bool degenerate = false;  // b = 0: the target curve is singular
};

/// c = -(2q^3 + 1)/q^2, b = (q - 1)^3/(q + q^2 + q^3), a = (b^2 - 6b - 3)/4.
template <class T>
WnfParams<T> hesse_to_wnf(const T& q) {
  const T q2 = q * q, q3 = q2 * q;
  const T s = q + q2 + q3;
  if (q == T(0) || s == T(0)) throw Error(ErrorKind::SingularParameter, "q = 0 or q + q^2 + q^3 = 0");
  WnfParams<T> w;
  w.q = q;
  w.c = -(T(2) * q3 + T(1)) / q2;
  const T m = q - T(1);
  w.b = m * m * m / s;
  w.a = (w.b * w.b - T(6) * w.b - T(3)) / T(4);
  w.degenerate = w.b == T(0);
  return w;
}

/// Real q with -(2q^3 + 1)/q^2 = c, i.e. roots of 2q^3 + c q^2 + 1. No
/// branch is preferred.
inline std::vector<double> wnf_q_from_c(double c) {
  std::vector<double> out;
  for (const auto& r : solve_cubic(2.0, c, 0.0, 1.0)) {
    if (std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r))) out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The parameter map c -> -(108 + c^3)/(3c^2) over any field.
template <class T>
T step_value(const T& c) {
  if (c == T(0)) throw Error(ErrorKind::PoleAtZero, "step has a pole at c = 0");
  return -(T(108) + c * c * c) / (T(3) * c * c);
}

/// q0 = -(sqrt3 + 1)/2 and q1 = (sqrt3 - 1)/2.
inline QSqrt3 loop2_q0() { return QSqrt3(BigRational(-1, 2), BigRational(-1, 2)); }
inline QSqrt3 loop2_q1() { return QSqrt3(BigRational(-1, 2), BigRational(1, 2)); }

/// True iff, exactly in Q(sqrt3), E_{a0,b0} is fixed by the Hesse
/// derivative applied twice and c0, c1 swap under the parameter map.
inline bool wnf_loop2_check() {
  const auto w0 = hesse_to_wnf(loop2_q0());
  const auto w1 = hesse_to_wnf(loop2_q1());
  const auto e0 = e_ab_form<QSqrt3>(w0.a, w0.b);
  const auto twice = hesse_derivative_field(hesse_derivative_field(e0));
  return proportional(twice, e0) && step_value(w0.c) == w1.c && step_value(w1.c) == w0.c;
}

namespace detail {

template <class T>
T sqrt27();

template <>
inline double sqrt27<double>() {
  return std::sqrt(27.0);
}

template <>
inline QSqrt3 sqrt27<QSqrt3>() {
  return QSqrt3(0, 3);
}

}  // namespace detail

/// x^3 - 3xy^2 + k (x^2 + y^2) z - (sqrt27/2) z^3 with
/// k = sqrt27 (c - 6)/(2 (c + 3)).
template <class T>
BasicCubicForm<T> hesse_to_d3(const T& c) {
  if (c == T(-3)) throw Error(ErrorKind::DegenerateParameter, "c = -3 is the degenerate member");
  const T r = detail::sqrt27<T>();
  const T k = r * (c - T(6)) / (T(2) * (c + T(3)));
  BasicCubicForm<T> f;
  f.at(3, 0, 0) = T(1);
  f.at(1, 2, 0) = T(-3);
  f.at(2, 0, 1) = k;
  f.at(0, 2, 1) = k;
  f.at(0, 0, 3) = -r / T(2);
  return f;
}

/// 2 sqrt3 x^3 + 9 (sqrt3 + 1)(x^2 + y^2) z - 6 sqrt3 x y^2 - 9 z^3, a cubic
/// whose Hesse derivative applied twice returns it.
template <class T>
BasicCubicForm<T> two_loop_d3_curve();

template <>
inline BasicCubicForm<QSqrt3> two_loop_d3_curve<QSqrt3>() {
  BasicCubicForm<QSqrt3> f;
  const QSqrt3 s = QSqrt3::sqrt3();
  f.at(3, 0, 0) = QSqrt3(2) * s;
  f.at(2, 0, 1) = QSqrt3(9) * (s + QSqrt3(1));
  f.at(0, 2, 1) = QSqrt3(9) * (s + QSqrt3(1));
  f.at(1, 2, 0) = QSqrt3(-6) * s;
  f.at(0, 0, 3) = QSqrt3(-9);
  return f;
}

template <>
inline BasicCubicForm<double> two_loop_d3_curve<double>() {
  return to_real(two_loop_d3_curve<QSqrt3>());
}

/// f(L0, L1, L2) for linear forms L (a linear change of coordinates).
template <class T>
BasicCubicForm<T> substitute(const BasicCubicForm<T>& f, const std::array<LinearForm3<T>, 3>& L) {
  BasicCubicForm<T> out;
  for (std::size_t idx = 0; idx < 10; ++idx) {
    if (f[idx] == T(0)) continue;
    const Exponent e = BasicCubicForm<T>::exponent(idx);
    std::array<int, 3> pw{e.x, e.y, e.z};
    std::vector<LinearForm3<T>> factors;
    for (int v = 0; v < 3; ++v) {
      for (int m = 0; m < pw[v]; ++m) factors.push_back(L[v]);
    }
    out = out + f[idx] * (factors[0] * factors[1] * factors[2]);
  }
  return out;
}

/// Largest coefficient change (after unit max-norm scaling) under the
/// reflection y -> -y and the rotation by 2pi/3 in the z = 1 chart.
inline double d3_symmetry_residual(const RealCubicForm& f) {
  const RealCubicForm g = normalize(f);
  const double c = -0.5, s = std::sqrt(3.0) / 2.0;
  const std::array<LinearForm3<double>, 3> rot{linear_form<double>(c, -s, 0), linear_form<double>(s, c, 0),
                                               linear_form<double>(0, 0, 1)};
  const std::array<LinearForm3<double>, 3> refl{linear_form<double>(1, 0, 0), linear_form<double>(0, -1, 0),
                                                linear_form<double>(0, 0, 1)};
  double r = 0.0;
  for (const auto& L : {rot, refl}) {
    const RealCubicForm h = substitute(g, L);
    for (std::size_t i = 0; i < 10; ++i) r = std::max(r, std::abs(h[i] - g[i]));
  }
  return r;
}

}  // namespace hesse
