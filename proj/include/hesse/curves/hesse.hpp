#pragma once

#include <array>
#include <cmath>

#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/homogeneous.hpp"
#include "hesse/curves/conic.hpp"
#include "hesse/curves/cubic_form.hpp"

namespace hesse {

template <class T>
using LinearMatrix3 = std::array<std::array<LinearForm3<T>, 3>, 3>;

/// Matrix of second partial derivatives; each entry is a linear form.
template <class T>
LinearMatrix3<T> hesse_matrix(const BasicCubicForm<T>& f) {
  LinearMatrix3<T> h;
  for (int i = 0; i < 3; ++i) {
    const auto fi = f.partial(i);
    for (int j = i; j < 3; ++j) {
      h[i][j] = fi.partial(j);
      h[j][i] = h[i][j];
    }
  }
  return h;
}

/// det of the Hesse matrix, without normalisation.
template <class T>
BasicCubicForm<T> hesse_determinant(const BasicCubicForm<T>& f) {
  return det3_linear(hesse_matrix(f));
}

/// The Hesse derivative as a canonical exact cubic: content stripped and
/// the first nonzero coefficient positive.
inline CubicForm hesse_derivative(const CubicForm& f) {
  CubicForm d = hesse_determinant(f);
  if (d.is_zero()) throw Error(ErrorKind::IdenticallyZeroHessian, "Hesse determinant vanishes identically");
  return normalize(d);
}

/// Hesse derivative over another exact field, scaled to a leading 1.
template <class T>
BasicCubicForm<T> hesse_derivative_field(const BasicCubicForm<T>& f) {
  BasicCubicForm<T> d = hesse_determinant(f);
  if (d.is_zero()) throw Error(ErrorKind::IdenticallyZeroHessian, "Hesse determinant vanishes identically");
  return normalize_first(d);
}

/// Hesse derivative of a floating-point form, scaled to unit max-norm.
inline RealCubicForm hesse_derivative(const RealCubicForm& f, double zero_tol = 1e-12) {
  RealCubicForm d = hesse_determinant(f);
  double md = 0.0, mf = 0.0;
  for (double v : d.coeffs()) md = std::max(md, std::abs(v));
  for (double v : f.coeffs()) mf = std::max(mf, std::abs(v));
  if (md <= zero_tol * mf * mf * mf) throw Error(ErrorKind::IdenticallyZeroHessian, "Hesse determinant vanishes identically");
  return normalize(d);
}

/// H_f(P): the polar conic of P, as a symmetric matrix.
template <class T, class S>
BasicSymConic<S> polar_conic(const BasicCubicForm<T>& f, const std::array<S, 3>& p) {
  const auto h = hesse_matrix(f);
  BasicSymConic<S> m;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) m.set(i, j, h[i][j](p[0], p[1], p[2]));
  }
  return m;
}

template <class T>
SymConic polar_conic(const BasicCubicForm<T>& f, const ProjPoint& p) {
  return polar_conic<T, double>(f, std::array<double, 3>{p[0], p[1], p[2]});
}

}  // namespace hesse
