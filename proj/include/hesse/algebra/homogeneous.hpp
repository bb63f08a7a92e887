#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "hesse/algebra/scalar.hpp"

namespace hesse {

/// Exponent triple (i, j, k) of x^i y^j z^k.
struct Exponent {
  int x, y, z;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Dense homogeneous polynomial of degree D in x, y, z. Monomials are
/// ordered by descending power of x, then of y; for D = 3 this is
/// x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
template <class T, int D>
class HomogForm {
 public:
  static constexpr std::size_t kSize = static_cast<std::size_t>((D + 1) * (D + 2) / 2);

  HomogForm() { c_.fill(T(0)); }
  explicit HomogForm(const std::array<T, kSize>& c) : c_(c) {}

  static constexpr std::size_t index(int i, int j, int k) {
    (void)k;
    // Block for x-power i starts after all blocks with larger x-power.
    const int before = D - i;  // number of blocks before
    const int offset = before * (before + 1) / 2;
    const int within = (D - i) - j;  // descending y inside the block
    return static_cast<std::size_t>(offset + within);
  }

  static constexpr Exponent exponent(std::size_t idx) {
    int n = static_cast<int>(idx);
    int before = 0;
    while ((before + 1) * (before + 2) / 2 <= n) ++before;
    const int within = n - before * (before + 1) / 2;
    const int i = D - before;
    const int j = (D - i) - within;
    return {i, j, D - i - j};
  }

  static std::string monomial_name(std::size_t idx) {
    const Exponent e = exponent(idx);
    std::string s;
    auto put = [&](char v, int p) {
      if (p == 0) return;
      s += v;
      if (p > 1) s += std::to_string(p);
    };
    put('x', e.x);
    put('y', e.y);
    put('z', e.z);
    return s.empty() ? "1" : s;
  }

  T& operator[](std::size_t i) { return c_[i]; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& at(int i, int j, int k) { return c_[index(i, j, k)]; }
  const T& at(int i, int j, int k) const { return c_[index(i, j, k)]; }
  const std::array<T, kSize>& coeffs() const { return c_; }
  std::array<T, kSize>& coeffs() { return c_; }

  bool is_zero() const {
    for (const auto& v : c_) {
      if (!(v == T(0))) return false;
    }
    return true;
  }

  template <class S>
  S operator()(const S& x, const S& y, const S& z) const {
    // Powers up to D of each variable, then a plain sum.
    std::array<S, D + 1> px, py, pz;
    px[0] = py[0] = pz[0] = S(1);
    for (int i = 1; i <= D; ++i) {
      px[i] = px[i - 1] * x;
      py[i] = py[i - 1] * y;
      pz[i] = pz[i - 1] * z;
    }
    S acc = S(0);
    for (std::size_t m = 0; m < kSize; ++m) {
      if (c_[m] == T(0)) continue;
      const Exponent e = exponent(m);
      acc = acc + scalar_cast<S>(c_[m]) * px[e.x] * py[e.y] * pz[e.z];
    }
    return acc;
  }

  HomogForm operator-() const {
    HomogForm r;
    for (std::size_t i = 0; i < kSize; ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend HomogForm operator+(const HomogForm& a, const HomogForm& b) {
    HomogForm r;
    for (std::size_t i = 0; i < kSize; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend HomogForm operator-(const HomogForm& a, const HomogForm& b) {
    HomogForm r;
    for (std::size_t i = 0; i < kSize; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend HomogForm operator*(const T& s, const HomogForm& a) {
    HomogForm r;
    for (std::size_t i = 0; i < kSize; ++i) r.c_[i] = s * a.c_[i];
    return r;
  }
  friend bool operator==(const HomogForm& a, const HomogForm& b) { return a.c_ == b.c_; }

  template <int E>
  friend HomogForm<T, D + E> operator*(const HomogForm& a, const HomogForm<T, E>& b) {
    HomogForm<T, D + E> r;
    for (std::size_t i = 0; i < kSize; ++i) {
      if (a.c_[i] == T(0)) continue;
      const Exponent ea = exponent(i);
      for (std::size_t j = 0; j < HomogForm<T, E>::kSize; ++j) {
        if (b[j] == T(0)) continue;
        const Exponent eb = HomogForm<T, E>::exponent(j);
        auto& slot = r.at(ea.x + eb.x, ea.y + eb.y, ea.z + eb.z);
        slot = slot + a.c_[i] * b[j];
      }
    }
    return r;
  }

  /// Partial derivative with respect to variable v (0 = x, 1 = y, 2 = z).
  HomogForm<T, D - 1> partial(int v) const {
    static_assert(D >= 1);
    HomogForm<T, D - 1> r;
    for (std::size_t m = 0; m < kSize; ++m) {
      if (c_[m] == T(0)) continue;
      Exponent e = exponent(m);
      int* p = v == 0 ? &e.x : (v == 1 ? &e.y : &e.z);
      if (*p == 0) continue;
      const int mult = *p;
      --*p;
      auto& slot = r.at(e.x, e.y, e.z);
      slot = slot + T(mult) * c_[m];
    }
    return r;
  }

  template <class U, class F>
  HomogForm<U, D> map(F&& f) const {
    HomogForm<U, D> r;
    for (std::size_t i = 0; i < kSize; ++i) r[i] = f(c_[i]);
    return r;
  }

 private:
  std::array<T, kSize> c_;
};

template <class T>
using LinearForm3 = HomogForm<T, 1>;

template <class T>
using QuadraticForm3 = HomogForm<T, 2>;

template <class T>
LinearForm3<T> linear_form(const T& u, const T& v, const T& w) {
  LinearForm3<T> l;
  l.at(1, 0, 0) = u;
  l.at(0, 1, 0) = v;
  l.at(0, 0, 1) = w;
  return l;
}

/// Cofactor-expansion determinant of a 3x3 matrix of linear forms.
template <class T>
HomogForm<T, 3> det3_linear(const std::array<std::array<LinearForm3<T>, 3>, 3>& m) {
  auto minor = [&](int r0, int r1, int c0, int c1) { return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]; };
  return m[0][0] * minor(1, 2, 1, 2) - m[0][1] * minor(1, 2, 0, 2) + m[0][2] * minor(1, 2, 0, 1);
}

}  // namespace hesse
