#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "hesse/algebra/errors.hpp"

namespace hesse {

using Count = std::int64_t;

inline Count pow3(int k) {
  if (k < 0 || k > 39) throw Error(ErrorKind::InvalidArgument, "exponent out of range for 64-bit counts");
  Count r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

/// Critical points of the n-th iterate: 2*3^r - 1 for n = 2r+1, 3^r - 1 for n = 2r.
inline Count count_critical_points(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const int r = n / 2;
  return n % 2 ? 2 * pow3(r) - 1 : pow3(r) - 1;
}

/// Real fixed points of the n-th iterate: 1 for odd n, 2*3^r - 3 for n = 2r.
inline Count count_fixed_points(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  return n % 2 ? 1 : 2 * pow3(n / 2) - 3;
}

/// Real zeros of the n-th iterate: 3^floor(n/2). count_zeros(0) = 1 by the
/// same formula, although the identity map has its zero at x = 0.
inline Count count_zeros(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  return pow3(n / 2);
}

inline int mobius(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "mobius needs n >= 1");
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

/// Number of nontrivial fixed points of h^(2d): 2*3^d - 4.
inline Count nontrivial_fixed_points_even(int d) { return 2 * pow3(d) - 4; }

/// Loops of minimal length n. Length 1 counts the trivial loop at -3; other
/// odd lengths have none. With strict set, odd n > 1 throws NotEven.
inline Count count_loops(int n, bool strict = false) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (n == 1) return 1;
  if (n % 2) {
    if (strict) throw Error(ErrorKind::NotEven, "loop lengths other than 1 are even");
    return 0;
  }
  const int r = n / 2;
  Count s = 0;
  for (int d = 1; d <= r; ++d) {
    if (r % d == 0) s += mobius(r / d) * nontrivial_fixed_points_even(d);
  }
  if (s % n) throw Error(ErrorKind::InvalidArgument, "loop sum not divisible by length");
  return s / n;
}

enum class ChainTarget { Minus3, Infinity };

inline std::string to_string(ChainTarget t) { return t == ChainTarget::Minus3 ? "minus3" : "infinity"; }

/// Chains of minimal length n ending at -3 or at infinity: 3^(r-1), r = ceil(n/2).
inline Count count_chains(ChainTarget, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  return pow3((n + 1) / 2 - 1);
}

enum class CountKind { Fixed, Zero, Critical };

inline std::string to_string(CountKind k) {
  switch (k) {
    case CountKind::Fixed:
      return "FIXED";
    case CountKind::Zero:
      return "ZERO";
    case CountKind::Critical:
      return "CRITICAL";
  }
  return "?";
}

inline Count closed_form(CountKind k, int n) {
  switch (k) {
    case CountKind::Fixed:
      return count_fixed_points(n);
    case CountKind::Zero:
      return count_zeros(n);
    case CountKind::Critical:
      return count_critical_points(n);
  }
  return 0;
}

struct CountReport {
  CountKind kind = CountKind::Fixed;
  int n = 1;
  Count closed_form = 0;
  std::optional<Count> oracle;

  bool agreement() const { return !oracle || *oracle == closed_form; }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"kind", to_string(kind)}, {"n", n}, {"closed_form", closed_form}, {"agreement", agreement()}};
    j["oracle"] = oracle ? nlohmann::json(*oracle) : nlohmann::json(nullptr);
    return j;
  }
};

}  // namespace hesse
