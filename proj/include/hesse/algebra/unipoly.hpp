#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/intpoly.hpp"

namespace hesse {

/// Univariate polynomial over Q, coefficients lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  UniPoly(std::initializer_list<BigRational> coeffs) : c_(coeffs) { normalize(); }

  static UniPoly constant(const BigRational& v) { return UniPoly({v}); }
  static UniPoly x() { return UniPoly({BigRational(0), BigRational(1)}); }
  static UniPoly monomial(const BigRational& v, std::size_t k) {
    std::vector<BigRational> c(k + 1);
    c[k] = v;
    return UniPoly(std::move(c));
  }
  static UniPoly from_int(const intpoly::IntPoly& p) {
    std::vector<BigRational> c(p.begin(), p.end());
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  const BigRational& leading() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }

  BigRational operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(d));
  }

  /// Primitive integer polynomial with the same roots (positive leading coefficient).
  intpoly::IntPoly to_primitive_int() const {
    BigInt l = 1;
    for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    intpoly::IntPoly p(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      BigRational s = c_[i] * l;
      p[i] = s.get_num();
    }
    return intpoly::primitive(std::move(p));
  }

  UniPoly monic() const {
    if (c_.empty()) return {};
    BigRational l = c_.back();
    std::vector<BigRational> r(c_);
    for (auto& q : r) q /= l;
    return UniPoly(std::move(r));
  }

  UniPoly operator-() const {
    std::vector<BigRational> r(c_);
    for (auto& q : r) q = -q;
    return UniPoly(std::move(r));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const BigRational& k, const UniPoly& a) {
    std::vector<BigRational> r(a.c_);
    for (auto& q : r) q *= k;
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly pow(unsigned k) const {
    UniPoly r = constant(1);
    UniPoly base = *this;
    while (k) {
      if (k & 1U) r = r * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return r;
  }

  /// this(g(x)).
  UniPoly compose(const UniPoly& g) const {
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + constant(*it);
    return r;
  }

  /// Euclidean division over Q.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    std::vector<BigRational> r(a.c_);
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<BigRational> q(a.c_.size() - b.c_.size() + 1);
    const BigRational& l = b.c_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      BigRational t = r[k + b.degree()] / l;
      if (t == 0) continue;
      for (int i = 0; i <= b.degree(); ++i) r[k + i] -= t * b.c_[i];
      q[k] = t;
    }
    r.resize(b.c_.size() - 1);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const BigRational& q = c_[i];
      if (q == 0) continue;
      BigRational aq = abs(q);
      if (!s.empty()) s += (q < 0) ? " - " : " + ";
      else if (q < 0) s += "-";
      bool unit = (aq == 1 && i > 0);
      if (!unit) s += hesse::to_string(aq);
      if (i > 0) {
        if (!unit) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

/// Monic gcd over Q (zero when both inputs are zero).
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return UniPoly::from_int(intpoly::gcd(a.to_primitive_int(), b.to_primitive_int())).monic();
}

inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of zero polynomial");
  return UniPoly::from_int(intpoly::squarefree_part(p.to_primitive_int())).monic();
}

}  // namespace hesse
