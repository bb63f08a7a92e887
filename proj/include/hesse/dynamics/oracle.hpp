#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/intpoly.hpp"
#include "hesse/algebra/rational_map.hpp"
#include "hesse/algebra/real_roots.hpp"
#include "hesse/algebra/sturm.hpp"
#include "hesse/dynamics/counts.hpp"
#include "hesse/dynamics/hmap.hpp"

namespace hesse {

inline constexpr int kDefaultOracleMax = 6;

/// Oracle budget: HESSE_LAB_NMAX if set (clamped to [1, 7]), else 6.
inline int oracle_nmax() {
  const char* env = std::getenv("HESSE_LAB_NMAX");
  if (!env || !*env) return kDefaultOracleMax;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return kDefaultOracleMax;
  return static_cast<int>(std::clamp(v, 1L, 7L));
}

enum class RootCounter { Descartes, Sturm };

struct OracleOptions {
  int nmax = oracle_nmax();
  RootCounter counter = RootCounter::Descartes;
  HMapParams params{};
};

namespace detail {

inline void check_budget(int n, int nmax) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (n > nmax) throw Error(ErrorKind::BudgetExceeded, "n = " + std::to_string(n) + " exceeds oracle budget " + std::to_string(nmax));
}

inline Count count_distinct(const intpoly::IntPoly& p, RootCounter counter) {
  if (counter == RootCounter::Sturm) {
    const intpoly::IntPoly q = intpoly::primitive(p);
    if (intpoly::degree(q) <= 0) return 0;
    return static_cast<Count>(SturmChain(q).count(Bound::neg_inf(), Bound::pos_inf()));
  }
  return static_cast<Count>(count_distinct_real_roots(p));
}

/// Square-free polynomial whose real roots are exactly the critical points
/// of num/den: the derivative numerator with multiple poles divided out.
inline intpoly::IntPoly critical_polynomial(const RationalMap1& f) {
  const intpoly::IntPoly s = intpoly::squarefree_part(intpoly::primitive(f.derivative_numerator()));
  const intpoly::IntPoly g = intpoly::gcd(s, f.den_int());
  if (intpoly::degree(g) <= 0) return s;
  return intpoly::divide_exact_or_throw(s, g);
}

inline intpoly::IntPoly kind_polynomial(const RationalMap1& f, CountKind kind) {
  switch (kind) {
    case CountKind::Fixed:
      return f.fixed_point_numerator();
    case CountKind::Zero:
      return f.num_int();
    case CountKind::Critical:
      return critical_polynomial(f);
  }
  return {};
}

}  // namespace detail

/// The n-th iterate of h as a reduced rational map.
inline RationalMap1 h_iterate_map(const HMapParams& p, int n) { return iterate_rational(p.map(), static_cast<unsigned>(n)); }

/// Independent count of fixed points, zeros or critical points of h^(n)
/// by exact composition and real-root counting.
inline Count oracle_count(CountKind kind, int n, const OracleOptions& opt = {}) {
  detail::check_budget(n, opt.nmax);
  const RationalMap1 f = h_iterate_map(opt.params, n);
  return detail::count_distinct(detail::kind_polynomial(f, kind), opt.counter);
}

/// All three counts from one composition.
inline std::vector<CountReport> oracle_reports(int n, const OracleOptions& opt = {}) {
  detail::check_budget(n, opt.nmax);
  const RationalMap1 f = h_iterate_map(opt.params, n);
  std::vector<CountReport> out;
  for (CountKind k : {CountKind::Fixed, CountKind::Zero, CountKind::Critical}) {
    CountReport r;
    r.kind = k;
    r.n = n;
    r.closed_form = closed_form(k, n);
    r.oracle = detail::count_distinct(detail::kind_polynomial(f, k), opt.counter);
    out.push_back(r);
  }
  return out;
}

/// Real roots of one of the oracle polynomials, refined to width < tol.
inline std::vector<RealRoot> oracle_points(const RationalMap1& f, CountKind kind, double tol = 1e-30) {
  const intpoly::IntPoly p = intpoly::squarefree_part(intpoly::primitive(detail::kind_polynomial(f, kind)));
  auto roots = isolate_real_roots_squarefree(p);
  const BigRational qtol = from_double(tol);
  for (auto& r : roots) refine_root(p, r, qtol);
  return roots;
}

/// Real solutions of h^(n)(x) = y for rational y (num - y den = 0).
inline std::vector<RealRoot> level_set(const RationalMap1& f, const BigRational& y, double tol = 1e-30) {
  intpoly::IntPoly yd = f.den_int();
  for (auto& c : yd) c *= y.get_num();
  intpoly::IntPoly nd = f.num_int();
  for (auto& c : nd) c *= y.get_den();
  const intpoly::IntPoly p = intpoly::squarefree_part(intpoly::primitive(intpoly::sub(nd, yd)));
  if (intpoly::degree(p) <= 0) return {};
  auto roots = isolate_real_roots_squarefree(p);
  const BigRational qtol = from_double(tol);
  for (auto& r : roots) refine_root(p, r, qtol);
  return roots;
}

/// Floating-point preimage tree: all real x with h^(k)(x) = y for
/// k = 0..depth, as levels (level k holds h^(-k)(y)), merging coincident
/// preimages.
inline std::vector<std::vector<double>> preimage_levels(const HMapParams& p, double y, int depth) {
  std::vector<std::vector<double>> levels{{y}};
  for (int k = 1; k <= depth; ++k) {
    std::vector<double> next;
    for (double v : levels.back()) {
      for (const auto& pre : preimages(p, v)) next.push_back(pre.x);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end(),
                           [](double u, double v) { return std::abs(u - v) <= 1e-9 * std::max(1.0, std::abs(u)); }),
               next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

/// Counts from the preimage-tree description: critical points of h^(n)
/// are the points reaching kappa in fewer than n steps, zeros are the
/// (n-1)-fold preimages of the real root of h.
inline Count tree_count(CountKind kind, int n, const HMapParams& p = {}) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (kind == CountKind::Critical) {
    const auto levels = preimage_levels(p, p.kappa(), n - 1);
    std::vector<double> all;
    for (const auto& l : levels) all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end(),
                          [](double u, double v) { return std::abs(u - v) <= 1e-9 * std::max(1.0, std::abs(u)); }),
              all.end());
    return static_cast<Count>(all.size());
  }
  if (kind == CountKind::Zero) {
    const double z = -std::cbrt(p.ad());
    return static_cast<Count>(preimage_levels(p, z, n - 1).back().size());
  }
  throw Error(ErrorKind::InvalidArgument, "tree_count supports ZERO and CRITICAL");
}

}  // namespace hesse
