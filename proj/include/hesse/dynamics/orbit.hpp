#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "hesse/algebra/errors.hpp"
#include "hesse/dynamics/extended_param.hpp"
#include "hesse/dynamics/hmap.hpp"

namespace hesse {

enum class Terminal { FixedMinus3, FixedInfinity, Periodic, Open };

inline std::string to_string(Terminal t) {
  switch (t) {
    case Terminal::FixedMinus3:
      return "FIXED_MINUS3";
    case Terminal::FixedInfinity:
      return "FIXED_INFINITY";
    case Terminal::Periodic:
      return "PERIODIC";
    case Terminal::Open:
      return "OPEN";
  }
  return "?";
}

struct OrbitRecord {
  ExtendedParam start;
  std::vector<ExtendedParam> states;
  Terminal terminal = Terminal::Open;
  int at = -1;      // index of the state where the terminal condition was met
  int period = 0;   // for PERIODIC
  bool demoted = false;  // exact rationals grew too large and were continued in floating point

  nlohmann::json to_json() const {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& v : states) s.push_back(v.to_string());
    nlohmann::json j = {{"start", start.to_string()}, {"states", s}, {"terminal", to_string(terminal)}, {"at", at}};
    if (terminal == Terminal::Periodic) j["period"] = period;
    if (demoted) j["demoted_to_float"] = true;
    return j;
  }
};

namespace detail {

inline bool same_state(const ExtendedParam& u, const ExtendedParam& v, double tol) {
  if (u.is_infinite() || v.is_infinite()) return u.is_infinite() && v.is_infinite();
  if (u.is_rational() && v.is_rational()) return u.rational() == v.rational();
  return std::abs(u.real() - v.real()) <= tol;
}

inline bool is_minus3(const ExtendedParam& c, double tol) {
  if (c.is_infinite()) return false;
  if (c.is_rational()) return c.rational() == -3;
  return std::abs(c.real() + 3.0) <= tol;
}

inline std::size_t bit_size(const BigRational& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) + mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

}  // namespace detail

/// Iterates step from c0 for at most max_steps steps and classifies the
/// orbit. Rational states are compared exactly. Each step roughly triples
/// the size of a rational state, so once a state passes max_bits it is
/// continued in floating point and the record is marked.
inline OrbitRecord orbit(const ExtendedParam& c0, int max_steps, double tol = 1e-9, std::size_t max_bits = 1u << 20) {
  if (max_steps < 1) throw Error(ErrorKind::InvalidArgument, "max_steps must be >= 1");
  OrbitRecord rec;
  rec.start = c0;
  rec.states.push_back(c0);
  for (int k = 0;; ++k) {
    const ExtendedParam& c = rec.states.back();
    if (c.is_infinite()) {
      rec.terminal = Terminal::FixedInfinity;
      rec.at = k;
      return rec;
    }
    if (detail::is_minus3(c, tol)) {
      rec.terminal = Terminal::FixedMinus3;
      rec.at = k;
      return rec;
    }
    for (int j = 0; j < k; ++j) {
      if (detail::same_state(rec.states[j], c, tol)) {
        rec.terminal = Terminal::Periodic;
        rec.at = k;
        rec.period = k - j;
        return rec;
      }
    }
    if (k == max_steps) break;
    ExtendedParam next = step(c);
    if (next.is_rational() && detail::bit_size(next.rational()) > max_bits) {
      next = ExtendedParam(next.real());
      rec.demoted = true;
    }
    rec.states.push_back(next);
  }
  rec.terminal = Terminal::Open;
  rec.at = max_steps;
  return rec;
}

}  // namespace hesse
