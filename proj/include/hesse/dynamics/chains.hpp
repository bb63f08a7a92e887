#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/dynamics/counts.hpp"
#include "hesse/dynamics/hmap.hpp"
#include "hesse/dynamics/oracle.hpp"

namespace hesse {

struct ChainSet {
  ChainTarget target = ChainTarget::Minus3;
  int n = 1;
  std::vector<double> starts;

  nlohmann::json to_json() const {
    return {{"target", to_string(target)}, {"n", n}, {"count", starts.size()}, {"starts", starts}};
  }
};

namespace detail {

/// Refines a simple real root of x^3 - b y x^2 + a near x0 by exact
/// rational bisection on a bracket found around it.
inline double refine_preimage(const HMapParams& p, double y, double x0) {
  const BigRational yq = from_double(y);
  auto f = [&](const BigRational& x) -> BigRational { return (x - p.b * yq) * x * x + p.a; };
  double w = 1e-12 * std::max(1.0, std::abs(x0));
  BigRational lo, hi;
  int slo = 0, shi = 0;
  for (int k = 0; k < 30; ++k, w *= 4) {
    lo = from_double(x0 - w);
    hi = from_double(x0 + w);
    slo = sgn(f(lo));
    shi = sgn(f(hi));
    if (slo == 0) return lo.get_d();
    if (shi == 0) return hi.get_d();
    if (slo != shi) break;
  }
  if (slo == shi) return x0;
  for (int it = 0; it < 80; ++it) {
    BigRational mid = (lo + hi) / 2;
    mid = from_double(mid.get_d());
    if (mid == lo || mid == hi) break;
    const int sm = sgn(f(mid));
    if (sm == 0) return mid.get_d();
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return BigRational((lo + hi) / 2).get_d();
}

/// Steps until the orbit of x reaches the target, or -1 within max_steps.
inline int steps_to_target(double x, ChainTarget t, int max_steps, double tol) {
  for (int k = 0; k <= max_steps; ++k) {
    if (t == ChainTarget::Infinity && std::isfinite(x) && std::abs(x) <= tol) return k + 1;
    if (t == ChainTarget::Minus3 && std::isfinite(x) && std::abs(x + 3.0) <= tol) return k;
    if (!std::isfinite(x)) return -1;
    x = step(x);
  }
  return -1;
}

}  // namespace detail

/// Forward steps for start value c to land on the target, or -1 within
/// max_steps. The landing test is |c_k + 3| <= tol for -3; infinity is
/// reached one step after |c_k| <= tol.
inline int chain_length(double c, ChainTarget t, int max_steps = 64, double tol = 1e-9) {
  return detail::steps_to_target(c, t, max_steps, tol);
}

/// All start values c0 whose orbit reaches the target in exactly n steps
/// and not earlier. For -3 this is the depth n-1 preimage tree of 6 (since
/// step(6) = -3); for infinity the tree of 0.
inline ChainSet enumerate_chains(ChainTarget target, int n, const OracleOptions& opt = {}) {
  detail::check_budget(n, opt.nmax);
  HMapParams p;  // chains are defined for the step map itself
  ChainSet out;
  out.target = target;
  out.n = n;
  std::vector<double> level{target == ChainTarget::Minus3 ? 6.0 : 0.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next;
    for (double y : level) {
      for (const auto& pre : preimages(p, y)) {
        next.push_back(pre.multiplicity == 1 ? detail::refine_preimage(p, y, pre.x) : pre.x);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end(),
                           [](double u, double v) { return std::abs(u - v) <= 1e-9 * std::max(1.0, std::abs(u)); }),
               next.end());
    level = std::move(next);
  }
  for (double c : level) {
    // Minimality: nothing on the way may already be at the target.
    const int len = chain_length(c, target, n, 1e-9);
    if (len == n) out.starts.push_back(c);
  }
  return out;
}

struct GrowthWitness {
  double c = 0.0;
  int n = 0;
  std::vector<double> backward;  // 6, then successive preimages
};

/// A chain start beyond +-B reaching -3: from 6, repeatedly take the real
/// preimage of largest absolute value. Each such step at least roughly
/// triples |c|, alternating sign.
inline GrowthWitness backward_growth_witness(double B) {
  if (!(B > 0)) throw Error(ErrorKind::InvalidArgument, "B must be positive");
  HMapParams p;
  GrowthWitness w;
  double c = 6.0;
  w.backward.push_back(c);
  int n = 1;
  while (std::abs(c) <= B) {
    const auto pre = preimages(p, c);
    double best = pre.front().x;
    for (const auto& q : pre) {
      if (std::abs(q.x) > std::abs(best)) best = q.x;
    }
    c = best;
    w.backward.push_back(c);
    ++n;
    if (n > 2000) throw Error(ErrorKind::BudgetExceeded, "growth witness did not escape");
  }
  w.c = c;
  w.n = n;
  return w;
}

}  // namespace hesse
