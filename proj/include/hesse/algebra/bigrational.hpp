#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "hesse/algebra/errors.hpp"

namespace hesse {

using BigInt = mpz_class;

/// Arbitrary precision rational. GMP keeps it canonical: gcd(num, den) = 1
/// and den > 0 after every arithmetic operation.
using BigRational = mpq_class;

inline std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline double to_double(const BigRational& q) { return q.get_d(); }

/// Parses "p", "p/q", or a finite decimal such as "-1.25e3" into an exact
/// rational. Whitespace around the token is ignored.
inline BigRational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational literal");

  auto parse_integer = [&](std::string_view digits) -> BigInt {
    std::string buf(digits);
    if (!buf.empty() && buf.front() == '+') buf.erase(buf.begin());
    if (buf.empty() || buf == "-") throw Error(ErrorKind::ParseError, "bad integer '" + std::string(digits) + "'");
    for (std::size_t i = (buf.front() == '-') ? 1 : 0; i < buf.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(buf[i]))) {
        throw Error(ErrorKind::ParseError, "bad integer '" + std::string(digits) + "'");
      }
    }
    return BigInt(buf, 10);
  };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(trim(s.substr(0, slash)));
    BigInt den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal with optional exponent.
  std::string mantissa(s);
  long exponent = 0;
  if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stol(mantissa.substr(e + 1), &used);
      if (used != mantissa.size() - e - 1) throw std::invalid_argument("exp");
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad exponent in '" + std::string(s) + "'");
    }
    mantissa.resize(e);
  }
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  BigRational q(parse_integer(mantissa));
  if (std::labs(exponent) > 100000) throw Error(ErrorKind::ParseError, "exponent out of range");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    q *= scale;
  } else {
    q /= scale;
  }
  return q;
}

/// Exact k-th root of a non-negative-or-odd integer when it exists.
inline std::optional<BigInt> exact_root(const BigInt& z, unsigned long k) {
  if (z < 0 && k % 2 == 0) return std::nullopt;
  BigInt a = abs(z);
  BigInt r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  if (z < 0) r = -r;
  return r;
}

inline std::optional<BigRational> exact_cbrt(const BigRational& q) {
  auto n = exact_root(q.get_num(), 3);
  auto d = exact_root(q.get_den(), 3);
  if (!n || !d) return std::nullopt;
  return BigRational(*n, *d);
}

/// Dyadic rational closest to x (exact conversion of a finite double).
inline BigRational from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "non-finite value");
  BigRational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

}  // namespace hesse
