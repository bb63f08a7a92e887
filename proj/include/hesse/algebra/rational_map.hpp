#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/intpoly.hpp"
#include "hesse/algebra/unipoly.hpp"

namespace hesse {

/// Univariate rational function num/den. Stored over Z: num and den are
/// coprime, jointly primitive, and den has a positive leading coefficient.
class RationalMap1 {
 public:
  RationalMap1() : num_{}, den_{1} {}

  RationalMap1(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational map with zero denominator");
    // Clear denominators of both with one common factor.
    BigInt l = 1;
    for (const auto& q : num.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    for (const auto& q : den.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    auto scaled = [&](const UniPoly& p) {
      intpoly::IntPoly r(p.coeffs().size());
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = BigRational(p.coeffs()[i] * l).get_num();
      return r;
    };
    num_ = scaled(num);
    den_ = scaled(den);
    reduce();
  }

  static RationalMap1 from_int(intpoly::IntPoly num, intpoly::IntPoly den) {
    RationalMap1 r;
    r.num_ = intpoly::trimmed(std::move(num));
    r.den_ = intpoly::trimmed(std::move(den));
    if (r.den_.empty()) throw Error(ErrorKind::ZeroPolynomial, "rational map with zero denominator");
    r.reduce();
    return r;
  }

  static RationalMap1 identity() { return from_int({0, 1}, {1}); }

  /// h(x) = (a + x^3) / (b x^2).
  static RationalMap1 hesse_h(const BigRational& a, const BigRational& b) {
    if (b == 0) throw Error(ErrorKind::InvalidArgument, "h requires b != 0");
    return RationalMap1(UniPoly({a, 0, 0, 1}), UniPoly({0, 0, b}));
  }

  UniPoly num() const { return UniPoly::from_int(num_); }
  UniPoly den() const { return UniPoly::from_int(den_); }
  const intpoly::IntPoly& num_int() const { return num_; }
  const intpoly::IntPoly& den_int() const { return den_; }

  int degree() const { return std::max(intpoly::degree(num_), intpoly::degree(den_)); }

  /// Value at a rational point; throws PoleAtZero at a pole.
  BigRational operator()(const BigRational& x) const {
    BigRational d = intpoly::eval(den_, x);
    if (d == 0) throw Error(ErrorKind::PoleAtZero, "rational map evaluated at a pole");
    return intpoly::eval(num_, x) / d;
  }

  /// Numerator of this(x) - x.
  intpoly::IntPoly fixed_point_numerator() const {
    intpoly::IntPoly xd(den_.size() + 1);
    for (std::size_t i = 0; i < den_.size(); ++i) xd[i + 1] = den_[i];
    return intpoly::sub(num_, xd);
  }

  /// Numerator of the derivative: num' den - num den'.
  intpoly::IntPoly derivative_numerator() const {
    return intpoly::sub(intpoly::mul(intpoly::derivative(num_), den_), intpoly::mul(num_, intpoly::derivative(den_)));
  }

  friend bool operator==(const RationalMap1& a, const RationalMap1& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string(const std::string& var = "x") const {
    return "(" + num().to_string(var) + ") / (" + den().to_string(var) + ")";
  }

 private:
  friend RationalMap1 compose_rational(const RationalMap1& f, const RationalMap1& g);

  void reduce() {
    if (num_.empty()) {
      den_ = {1};
      return;
    }
    intpoly::IntPoly g = intpoly::gcd(num_, den_);
    if (intpoly::degree(g) > 0) {
      g = intpoly::primitive(g);
      num_ = intpoly::divide_exact_or_throw(num_, g);
      den_ = intpoly::divide_exact_or_throw(den_, g);
    }
    BigInt c = intpoly::content(num_);
    BigInt cd = intpoly::content(den_);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    if (intpoly::lc(den_) < 0) c = -c;
    if (c != 1) {
      for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      for (auto& x : den_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
  }

  intpoly::IntPoly num_;
  intpoly::IntPoly den_;
};

/// f(g(x)), reduced. Uses the homogenised form of f so no rational
/// arithmetic is needed: with g = P/Q and d = deg f,
/// f(g) = sum N_i P^i Q^(d-i) / sum D_i P^i Q^(d-i).
inline RationalMap1 compose_rational(const RationalMap1& f, const RationalMap1& g) {
  using namespace intpoly;
  const int d = std::max(f.degree(), 0);
  std::vector<IntPoly> ppow(d + 1), qpow(d + 1);
  ppow[0] = {1};
  qpow[0] = {1};
  for (int i = 1; i <= d; ++i) {
    ppow[i] = mul(ppow[i - 1], g.num_);
    qpow[i] = mul(qpow[i - 1], g.den_);
  }
  auto homog = [&](const IntPoly& c) {
    IntPoly acc;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      acc = add(acc, scale(mul(ppow[i], qpow[d - i]), c[i]));
    }
    return acc;
  };
  return RationalMap1::from_int(homog(f.num_), homog(f.den_));
}

/// n-fold iterate f o f o ... o f (n >= 1); n = 0 gives the identity.
inline RationalMap1 iterate_rational(const RationalMap1& f, unsigned n) {
  RationalMap1 r = RationalMap1::identity();
  for (unsigned i = 0; i < n; ++i) r = compose_rational(f, r);
  return r;
}

}  // namespace hesse
