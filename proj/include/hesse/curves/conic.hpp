#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <type_traits>
#include <utility>

#include "hesse/algebra/cubic.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/homogeneous.hpp"

namespace hesse {

/// Symmetric 3x3 matrix M, standing for the conic <X, M X> = 0. Only the
/// upper triangle is stored, so M = M^T holds by construction.
template <class S>
class BasicSymConic {
 public:
  using Matrix = std::array<std::array<S, 3>, 3>;

  BasicSymConic() { e_.fill(S(0)); }
  explicit BasicSymConic(const Matrix& m) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) set(i, j, m[i][j]);
    }
  }

  S operator()(int i, int j) const { return e_[slot(i, j)]; }
  void set(int i, int j, const S& v) { e_[slot(i, j)] = v; }

  Matrix matrix() const {
    Matrix m;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] = (*this)(i, j);
    }
    return m;
  }

  S det() const {
    const Matrix m = matrix();
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  double norm() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) s += std::norm((*this)(i, j));
    }
    return std::sqrt(s);
  }

  S value(const std::array<S, 3>& x) const {
    S acc = S(0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) acc += x[i] * (*this)(i, j) * x[j];
    }
    return acc;
  }

  /// Coefficients of <X, M X> as a ternary quadratic form.
  QuadraticForm3<S> quadratic() const {
    QuadraticForm3<S> q;
    q.at(2, 0, 0) = (*this)(0, 0);
    q.at(0, 2, 0) = (*this)(1, 1);
    q.at(0, 0, 2) = (*this)(2, 2);
    q.at(1, 1, 0) = S(2) * (*this)(0, 1);
    q.at(1, 0, 1) = S(2) * (*this)(0, 2);
    q.at(0, 1, 1) = S(2) * (*this)(1, 2);
    return q;
  }

  static BasicSymConic from_quadratic(const QuadraticForm3<S>& q) {
    BasicSymConic c;
    c.set(0, 0, q.at(2, 0, 0));
    c.set(1, 1, q.at(0, 2, 0));
    c.set(2, 2, q.at(0, 0, 2));
    c.set(0, 1, q.at(1, 1, 0) / S(2));
    c.set(0, 2, q.at(1, 0, 1) / S(2));
    c.set(1, 2, q.at(0, 1, 1) / S(2));
    return c;
  }

 private:
  static constexpr int slot(int i, int j) {
    if (i > j) std::swap(i, j);
    return i == 0 ? j : (i == 1 ? 2 + j : 5);
  }
  std::array<S, 6> e_;
};

using SymConic = BasicSymConic<double>;
using ComplexSymConic = BasicSymConic<Complex>;

/// Two lines whose product is a degenerate conic.
template <class S>
struct BasicLinePair {
  LinearForm3<S> l1;
  LinearForm3<S> l2;
};

using LinePair = BasicLinePair<double>;
using ComplexLinePair = BasicLinePair<Complex>;

namespace detail {

template <class S>
double mag(const S& v) {
  return std::abs(v);
}

template <class S>
std::array<S, 3> line_coeffs(const LinearForm3<S>& l) {
  return {l.at(1, 0, 0), l.at(0, 1, 0), l.at(0, 0, 1)};
}

/// Divides a line by its largest-magnitude coefficient.
template <class S>
LinearForm3<S> unit_line(const LinearForm3<S>& l) {
  auto c = line_coeffs(l);
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (mag(c[i]) > mag(c[k]) * (1 + 1e-12)) k = i;
  }
  const S s = c[k];
  return linear_form<S>(c[0] / s, c[1] / s, c[2] / s);
}

template <class S>
bool line_less(const LinearForm3<S>& a, const LinearForm3<S>& b) {
  auto ca = line_coeffs(a), cb = line_coeffs(b);
  for (int i = 0; i < 3; ++i) {
    if constexpr (std::is_same_v<S, double>) {
      if (std::abs(ca[i] - cb[i]) > 1e-12) return ca[i] < cb[i];
    } else {
      if (std::abs(ca[i].real() - cb[i].real()) > 1e-12) return ca[i].real() < cb[i].real();
      if (std::abs(ca[i].imag() - cb[i].imag()) > 1e-12) return ca[i].imag() < cb[i].imag();
    }
  }
  return false;
}

template <class S>
typename BasicSymConic<S>::Matrix adjugate(const typename BasicSymConic<S>::Matrix& m) {
  typename BasicSymConic<S>::Matrix b;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      b[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return b;
}

}  // namespace detail

/// Largest coefficient deviation between l1*l2 and the best multiple of the
/// conic, with both sides scaled to unit Frobenius norm first.
template <class S>
double line_pair_residual(const BasicSymConic<S>& c, const BasicLinePair<S>& lp) {
  const QuadraticForm3<S> prod = lp.l1 * lp.l2;
  const QuadraticForm3<S> q = c.quadratic();
  double np = 0.0, nq = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    np += std::norm(prod[i]);
    nq += std::norm(q[i]);
  }
  np = std::sqrt(np);
  nq = std::sqrt(nq);
  if (np == 0.0 || nq == 0.0) return (np == 0.0 && nq == 0.0) ? 0.0 : 1.0;
  // lambda minimising |p - lambda q| for the unit-normalised forms.
  S dot = S(0);
  for (std::size_t i = 0; i < 6; ++i) {
    if constexpr (std::is_same_v<S, double>) {
      dot += prod[i] * q[i];
    } else {
      dot += prod[i] * std::conj(q[i]);
    }
  }
  const S lambda = dot / S(np * nq);
  double r = 0.0;
  for (std::size_t i = 0; i < 6; ++i) r = std::max(r, std::abs(prod[i] / S(np) - lambda * q[i] / S(nq)));
  return r;
}

/// Splits a degenerate conic into two lines. Rank 2 goes through the
/// adjugate: adj(M) = -q q^T (up to scale) with q the lines' meeting point;
/// adding the cross-product matrix of q turns M into the rank-1 matrix
/// l1 l2^T. Rank 1 returns the repeated line twice. Lines come back divided
/// by their largest coefficient and sorted.
template <class S>
BasicLinePair<S> split_degenerate_conic_any(const BasicSymConic<S>& c, double tol = 1e-8) {
  using Matrix = typename BasicSymConic<S>::Matrix;
  const double n = c.norm();
  if (n == 0.0) throw Error(ErrorKind::RankZero, "conic matrix is zero");
  if (std::abs(c.det()) > tol * n * n * n) throw Error(ErrorKind::NotDegenerate, "conic determinant exceeds tolerance");
  const Matrix m = c.matrix();
  const Matrix b = detail::adjugate<S>(m);
  double bmax = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) bmax = std::max(bmax, std::abs(b[i][j]));
  }
  BasicLinePair<S> out;
  if (bmax <= std::sqrt(tol) * n * n) {
    // Rank 1: M = +-l l^T.
    int i = 0;
    for (int k = 1; k < 3; ++k) {
      if (std::abs(m[k][k]) > std::abs(m[i][i])) i = k;
    }
    S d = m[i][i];
    S s;
    if constexpr (std::is_same_v<S, double>) {
      s = std::sqrt(std::abs(d));
    } else {
      s = std::sqrt(d);
    }
    const auto l = linear_form<S>(m[i][0] / s, m[i][1] / s, m[i][2] / s);
    out = {detail::unit_line(l), detail::unit_line(l)};
    return out;
  }
  int i = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(b[k][k]) > std::abs(b[i][i])) i = k;
  }
  S beta;
  if constexpr (std::is_same_v<S, double>) {
    if (b[i][i] > 0) throw Error(ErrorKind::NonRealLines, "conic splits into complex conjugate lines");
    beta = std::sqrt(-b[i][i]);
  } else {
    beta = std::sqrt(-b[i][i]);
  }
  const std::array<S, 3> p{b[0][i] / beta, b[1][i] / beta, b[2][i] / beta};
  Matrix cm = m;
  cm[0][1] += p[2];
  cm[0][2] -= p[1];
  cm[1][0] -= p[2];
  cm[1][2] += p[0];
  cm[2][0] += p[1];
  cm[2][1] -= p[0];
  int r = 0, s = 0;
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      if (std::abs(cm[u][v]) > std::abs(cm[r][s])) {
        r = u;
        s = v;
      }
    }
  }
  const auto l1 = linear_form<S>(cm[r][0], cm[r][1], cm[r][2]);
  const auto l2 = linear_form<S>(cm[0][s], cm[1][s], cm[2][s]);
  out = {detail::unit_line(l1), detail::unit_line(l2)};
  if (detail::line_less(out.l2, out.l1)) std::swap(out.l1, out.l2);
  return out;
}

/// Real split; throws NonRealLines when the two lines are complex conjugates.
inline LinePair split_degenerate_conic(const SymConic& c, double tol = 1e-8) {
  return split_degenerate_conic_any<double>(c, tol);
}

inline ComplexLinePair split_degenerate_conic_complex(const ComplexSymConic& c, double tol = 1e-8) {
  return split_degenerate_conic_any<Complex>(c, tol);
}

inline ComplexSymConic complexify(const SymConic& c) {
  ComplexSymConic r;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) r.set(i, j, Complex(c(i, j)));
  }
  return r;
}

}  // namespace hesse
