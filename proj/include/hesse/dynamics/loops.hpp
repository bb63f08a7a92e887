#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <json.hpp>

#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/real_roots.hpp"
#include "hesse/dynamics/counts.hpp"
#include "hesse/dynamics/hmap.hpp"
#include "hesse/dynamics/oracle.hpp"

namespace hesse {

inline constexpr int kFloatLoopMax = 10;

enum class LoopMode { Exact, Float };

/// One periodic orbit of minimal period values.size(), listed in forward
/// order starting from its largest element.
struct Cycle {
  std::vector<double> values;

  /// Largest relative gap between step(c_i) and c_{i+1}, cyclically.
  double closure_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double next = values[(i + 1) % values.size()];
      r = std::max(r, std::abs(step(values[i]) - next) / std::max(1.0, std::abs(next)));
    }
    return r;
  }
};

struct LoopSet {
  int n = 0;
  LoopMode mode = LoopMode::Exact;
  std::vector<Cycle> cycles;
  std::size_t fixed_points = 0;  // real fixed points of h^(n), including -3

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : cycles) cs.push_back({{"values", c.values}, {"closure_residual", c.closure_residual()}});
    return {{"n", n},
            {"mode", mode == LoopMode::Exact ? "exact" : "float"},
            {"fixed_points", fixed_points},
            {"count", cycles.size()},
            {"cycles", cs}};
  }
};

namespace detail {

inline std::size_t nearest(const std::vector<double>& xs, double y) {
  auto it = std::lower_bound(xs.begin(), xs.end(), y);
  std::size_t best = it == xs.end() ? xs.size() - 1 : static_cast<std::size_t>(it - xs.begin());
  if (best > 0 && std::abs(xs[best - 1] - y) < std::abs(xs[best] - y)) --best;
  return best;
}

/// Splits the sorted fixed points of h^(n) into orbits of the step map,
/// keeping those of minimal period n. image[i] is the index of step(x_i).
inline std::vector<Cycle> cycles_from_permutation(const std::vector<double>& xs, const std::vector<std::size_t>& image,
                                                  int n) {
  std::vector<bool> seen(xs.size(), false);
  std::vector<Cycle> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      orbit.push_back(j);
      j = image[j];
    }
    if (j != i) throw Error(ErrorKind::InvalidArgument, "step does not permute the fixed points of h^(n)");
    if (static_cast<int>(orbit.size()) != n) continue;
    auto top = std::max_element(orbit.begin(), orbit.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::rotate(orbit.begin(), top, orbit.end());
    Cycle c;
    for (std::size_t k : orbit) c.values.push_back(xs[k]);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.values.front() > b.values.front(); });
  return out;
}

inline double bisect(const HMapParams& p, int n, double lo, double hi) {
  auto g = [&](double x) { return h_iterate(p, x, n) - x; };
  double glo = g(lo);
  for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Fixed points of h^(n) in floating point. Between consecutive poles and
/// critical points of h^(n) the iterate is monotone, so each such piece is
/// sampled and sign changes of h^(n)(x) - x are bisected.
inline std::vector<double> float_fixed_points(const HMapParams& p, int n) {
  std::vector<double> breaks;
  for (const auto& level : preimage_levels(p, 0.0, n - 1)) breaks.insert(breaks.end(), level.begin(), level.end());
  for (const auto& level : preimage_levels(p, p.kappa(), n - 1)) breaks.insert(breaks.end(), level.begin(), level.end());
  std::sort(breaks.begin(), breaks.end());
  const double far = 16.0 * std::max({1.0, std::abs(breaks.front()), std::abs(breaks.back())});
  std::vector<double> edges;
  edges.push_back(-far);
  edges.insert(edges.end(), breaks.begin(), breaks.end());
  edges.push_back(far);
  std::vector<double> roots;
  auto g = [&](double x) { return h_iterate(p, x, n) - x; };
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e], b = edges[e + 1];
    if (!(b > a)) continue;
    constexpr int kSamples = 256;
    double prev_x = 0.0, prev_g = std::numeric_limits<double>::quiet_NaN();
    for (int s = 1; s < kSamples; ++s) {
      // Denser near both ends, where h^(n) runs off to infinity.
      const double t = 0.5 - 0.5 * std::cos(std::acos(-1.0) * s / kSamples);
      const double x = a + (b - a) * t;
      const double gx = g(x);
      if (!std::isfinite(gx)) {
        prev_g = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      if (gx == 0.0) {
        roots.push_back(x);
      } else if (std::isfinite(prev_g) && (gx > 0) != (prev_g > 0)) {
        roots.push_back(bisect(p, n, prev_x, x));
      }
      prev_x = x;
      prev_g = gx;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double u, double v) { return std::abs(u - v) <= 1e-9 * std::max(1.0, std::abs(u)); }),
              roots.end());
  return roots;
}

}  // namespace detail

/// All cycles of minimal period n of the step map. Exact mode isolates the
/// real roots of num(h^(n)(x) - x) and identifies step as a permutation of
/// them; float mode (n <= 10) finds the same roots by bisection.
inline LoopSet enumerate_loops(int n, LoopMode mode = LoopMode::Exact, const OracleOptions& opt = {}) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const HMapParams& p = opt.params;
  LoopSet out;
  out.n = n;
  out.mode = mode;
  std::vector<double> xs;
  std::vector<std::size_t> image;
  if (mode == LoopMode::Exact) {
    detail::check_budget(n, opt.nmax);
    const auto roots = oracle_points(h_iterate_map(p, n), CountKind::Fixed);
    std::vector<BigRational> mids;
    for (const auto& r : roots) {
      mids.push_back(r.midpoint());
      xs.push_back(r.value());
    }
    for (const auto& m : mids) {
      if (m == 0) throw Error(ErrorKind::PoleAtZero, "fixed point at the pole");
      image.push_back(detail::nearest(xs, to_double(h_eval(p, m))));
    }
  } else {
    if (n > kFloatLoopMax) throw Error(ErrorKind::BudgetExceeded, "float loop search supports n <= 10");
    xs = detail::float_fixed_points(p, n);
    for (double x : xs) image.push_back(detail::nearest(xs, h_eval(p, x)));
  }
  out.fixed_points = xs.size();
  out.cycles = detail::cycles_from_permutation(xs, image, n);
  return out;
}

}  // namespace hesse
