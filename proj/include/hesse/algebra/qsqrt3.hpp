#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <string_view>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/scalar.hpp"

namespace hesse {

/// Exact element p + q*sqrt(3) of the real quadratic field Q(sqrt 3).
class QSqrt3 {
 public:
  QSqrt3() : p_(0), q_(0) {}
  QSqrt3(int p) : p_(p), q_(0) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(const BigRational& p) : p_(p), q_(0) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(const BigRational& p, const BigRational& q) : p_(p), q_(q) {}

  static QSqrt3 sqrt3() { return {0, 1}; }

  const BigRational& rational_part() const { return p_; }
  const BigRational& sqrt3_part() const { return q_; }
  bool is_rational() const { return q_ == 0; }

  /// Galois conjugate p - q*sqrt(3).
  QSqrt3 conjugate() const { return {p_, -q_}; }
  /// Field norm p^2 - 3 q^2.
  BigRational norm() const { return p_ * p_ - 3 * q_ * q_; }

  int sign() const {
    const int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 with 3 q^2.
    const int c = cmp(BigRational(p_ * p_), BigRational(3 * q_ * q_));
    return c == 0 ? 0 : (c > 0 ? sp : sq);
  }

  double to_double() const { return p_.get_d() + q_.get_d() * std::sqrt(3.0); }

  QSqrt3 operator-() const { return {-p_, -q_}; }
  friend QSqrt3 operator+(const QSqrt3& a, const QSqrt3& b) { return {a.p_ + b.p_, a.q_ + b.q_}; }
  friend QSqrt3 operator-(const QSqrt3& a, const QSqrt3& b) { return {a.p_ - b.p_, a.q_ - b.q_}; }
  friend QSqrt3 operator*(const QSqrt3& a, const QSqrt3& b) {
    return {a.p_ * b.p_ + 3 * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_};
  }
  friend QSqrt3 operator/(const QSqrt3& a, const QSqrt3& b) {
    const BigRational n = b.norm();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "division by zero in Q(sqrt3)");
    const QSqrt3 t = a * b.conjugate();
    return {t.p_ / n, t.q_ / n};
  }
  QSqrt3& operator+=(const QSqrt3& o) { return *this = *this + o; }
  QSqrt3& operator-=(const QSqrt3& o) { return *this = *this - o; }
  QSqrt3& operator*=(const QSqrt3& o) { return *this = *this * o; }
  QSqrt3& operator/=(const QSqrt3& o) { return *this = *this / o; }

  friend bool operator==(const QSqrt3& a, const QSqrt3& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend bool operator!=(const QSqrt3& a, const QSqrt3& b) { return !(a == b); }
  friend bool operator<(const QSqrt3& a, const QSqrt3& b) { return (a - b).sign() < 0; }

  std::string to_string() const {
    if (q_ == 0) return hesse::to_string(p_);
    std::string qs;
    const BigRational aq = abs(q_);
    qs = (aq == 1) ? "sqrt3" : hesse::to_string(aq) + "*sqrt3";
    if (p_ == 0) return (q_ < 0 ? "-" : "") + qs;
    return hesse::to_string(p_) + (q_ < 0 ? "-" : "+") + qs;
  }

 private:
  BigRational p_;
  BigRational q_;
};

inline std::ostream& operator<<(std::ostream& os, const QSqrt3& v) { return os << v.to_string(); }

/// Parses "p", "q*sqrt3", "p+q*sqrt3", "p-sqrt3", "sqrt3" with rational or
/// decimal p and q. Spaces are ignored.
inline QSqrt3 parse_qsqrt3(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s += ch;
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty literal");
  const auto pos = s.find("sqrt3");
  if (pos == std::string::npos) return QSqrt3(parse_rational(s));
  if (pos + 5 != s.size()) throw Error(ErrorKind::ParseError, "sqrt3 must end the literal: '" + s + "'");
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // Split head into rational part and the coefficient of sqrt3 at the last
  // sign that is not part of an exponent or the very first character.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e' && head[i - 1] != 'E' && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  std::string rat = split == std::string::npos ? "" : head.substr(0, split);
  std::string coef = split == std::string::npos ? head : head.substr(split);
  BigRational q;
  if (coef.empty() || coef == "+") {
    q = 1;
  } else if (coef == "-") {
    q = -1;
  } else {
    q = parse_rational(coef);
  }
  BigRational p = rat.empty() ? BigRational(0) : parse_rational(rat);
  return {p, q};
}

template <>
struct ScalarCast<double, QSqrt3> {
  static double apply(const QSqrt3& v) { return v.to_double(); }
};

template <>
struct ScalarCast<QSqrt3, BigRational> {
  static QSqrt3 apply(const BigRational& v) { return QSqrt3(v); }
};

}  // namespace hesse
