#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/intpoly.hpp"
#include "hesse/algebra/unipoly.hpp"

// Exact real-root isolation by Descartes' rule of signs with bisection
// (Vincent-Collins-Akritas). Works on square-free integer polynomials and is
// far cheaper than Sturm chains at degree in the hundreds.
namespace hesse {

/// One isolated real root: lo < root < hi, or lo == hi == root when the
/// root landed exactly on a dyadic split point.
struct RealRoot {
  BigRational lo;
  BigRational hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  double value() const { return midpoint().get_d(); }
  BigRational width() const { return hi - lo; }
};

namespace descartes {

using intpoly::IntPoly;

/// Sign variations of (x+1)^n q(1/(x+1)), i.e. Descartes' bound for the
/// roots of q in (0, 1). Stops early once the answer is known to be >= 2.
inline int variations_01(const IntPoly& q) {
  IntPoly r(q.rbegin(), q.rend());
  const std::size_t n = r.size() - 1;
  int v = 0, s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1;; --j) {
      r[j] += r[j + 1];
      if (j == i) break;
    }
    int t = sgn(r[i]);
    if (t) {
      if (s && t != s && ++v >= 2) return 2;
      s = t;
    }
  }
  int t = sgn(r[n]);
  if (t && s && t != s) ++v;
  return v;
}

inline void strip_powers_of_two(IntPoly& p) {
  mp_bitcnt_t m = ~static_cast<mp_bitcnt_t>(0);
  for (auto& c : p) {
    if (c != 0) m = std::min(m, mpz_scan1(c.get_mpz_t(), 0));
  }
  if (m != 0 && m != ~static_cast<mp_bitcnt_t>(0)) {
    for (auto& c : p) mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), m);
  }
}

/// Dyadic interval (c / 2^k, (c + 1) / 2^k) in the unit-scaled coordinate.
struct Cell {
  BigInt c;
  unsigned long k;
};

struct Isolation {
  std::vector<std::pair<Cell, bool>> cells;  // bool: exact root at the cell's left end
  std::size_t count = 0;
};

template <bool Record>
void recurse(IntPoly q, Cell cell, Isolation& out) {
  const int v = variations_01(q);
  if (v == 0) return;
  if (v == 1) {
    ++out.count;
    if constexpr (Record) out.cells.push_back({cell, false});
    return;
  }
  const std::size_t n = q.size() - 1;
  IntPoly left = std::move(q);
  for (std::size_t i = 0; i <= n; ++i) mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), n - i);
  strip_powers_of_two(left);
  IntPoly right = left;
  intpoly::taylor_shift_one(right);
  Cell lc{cell.c * 2, cell.k + 1};
  Cell rc{cell.c * 2 + 1, cell.k + 1};
  if (right[0] == 0) {
    ++out.count;
    if constexpr (Record) out.cells.push_back({rc, true});
    right.erase(right.begin());
  }
  recurse<Record>(std::move(left), lc, out);
  recurse<Record>(std::move(right), rc, out);
}

/// Exponent K with every positive root of p strictly below 2^K.
inline unsigned long positive_root_bound_exp(const IntPoly& p) {
  const std::size_t n = p.size() - 1;
  const long lbits = static_cast<long>(mpz_sizeinbase(p[n].get_mpz_t(), 2));
  long k = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] == 0) continue;
    long e = static_cast<long>(mpz_sizeinbase(p[i].get_mpz_t(), 2)) - lbits + 1;
    long d = static_cast<long>(n - i);
    long kk = (e > 0 ? (e + d - 1) / d : 0) + 2;
    k = std::max(k, kk);
  }
  return static_cast<unsigned long>(k);
}

/// Positive roots of a square-free p with p(0) != 0.
template <bool Record>
Isolation positive_roots(const IntPoly& p, unsigned long& K) {
  Isolation out;
  K = positive_root_bound_exp(p);
  IntPoly q = p;
  for (std::size_t i = 0; i < q.size(); ++i) mpz_mul_2exp(q[i].get_mpz_t(), q[i].get_mpz_t(), K * i);
  strip_powers_of_two(q);
  recurse<Record>(std::move(q), Cell{0, 0}, out);
  return out;
}

inline BigRational dyadic(const BigInt& num, long exp2) {
  BigRational r(num);
  if (exp2 >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exp2));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp2));
  }
  return r;
}

}  // namespace descartes

/// Distinct real roots of a square-free integer polynomial.
inline std::size_t count_real_roots_squarefree(const intpoly::IntPoly& p) {
  intpoly::IntPoly q = intpoly::trimmed(p);
  if (q.empty()) throw Error(ErrorKind::ZeroPolynomial, "root count of zero polynomial");
  std::size_t count = 0;
  if (q[0] == 0) {
    ++count;
    q.erase(q.begin());
  }
  if (intpoly::degree(q) <= 0) return count;
  unsigned long K = 0;
  count += descartes::positive_roots<false>(q, K).count;
  count += descartes::positive_roots<false>(intpoly::reflect(q), K).count;
  return count;
}

/// Distinct real roots of any nonzero integer polynomial.
inline std::size_t count_distinct_real_roots(const intpoly::IntPoly& p) {
  intpoly::IntPoly q = intpoly::primitive(p);
  if (q.empty()) throw Error(ErrorKind::ZeroPolynomial, "root count of zero polynomial");
  if (intpoly::degree(q) == 0) return 0;
  return count_real_roots_squarefree(intpoly::squarefree_part(q));
}

inline std::size_t count_distinct_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of zero polynomial");
  return count_distinct_real_roots(p.to_primitive_int());
}

/// Shrinks an isolating interval of a root of the square-free p until its
/// width is below tol. The endpoints never become roots except when the
/// bisection lands on one exactly, which collapses the interval.
inline void refine_root(const intpoly::IntPoly& p, RealRoot& r, const BigRational& tol) {
  if (r.exact()) return;
  int slo = intpoly::sign_at(p, r.lo);
  while (r.hi - r.lo >= tol) {
    BigRational mid = r.midpoint();
    int sm = intpoly::sign_at(p, mid);
    if (sm == 0) {
      r.lo = r.hi = mid;
      return;
    }
    if (sm == slo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
}

/// Isolating intervals (ascending) for the real roots of a square-free p.
inline std::vector<RealRoot> isolate_real_roots_squarefree(const intpoly::IntPoly& p) {
  intpoly::IntPoly q = intpoly::trimmed(p);
  if (q.empty()) throw Error(ErrorKind::ZeroPolynomial, "root isolation of zero polynomial");
  std::vector<RealRoot> roots;
  if (q[0] == 0) {
    roots.push_back({0, 0, 1});
    q.erase(q.begin());
  }
  if (intpoly::degree(q) <= 0) return roots;
  for (int side : {1, -1}) {
    unsigned long K = 0;
    const intpoly::IntPoly src = side > 0 ? q : intpoly::reflect(q);
    auto iso = descartes::positive_roots<true>(src, K);
    for (const auto& [cell, exact] : iso.cells) {
      const long e = static_cast<long>(K) - static_cast<long>(cell.k);
      BigRational lo = descartes::dyadic(cell.c, e);
      BigRational hi = exact ? lo : descartes::dyadic(cell.c + 1, e);
      if (side < 0) {
        BigRational t = -hi;
        hi = -lo;
        lo = t;
      }
      roots.push_back({lo, hi, 1});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return roots;
}

/// All distinct real roots of p, ascending, each refined to width < tol and
/// tagged with its multiplicity from the square-free decomposition.
inline std::vector<RealRoot> isolate_real_roots(const UniPoly& p, double tol = 1e-9) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root isolation of zero polynomial");
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const BigRational qtol = from_double(tol);
  std::vector<RealRoot> all;
  auto factors = intpoly::squarefree_decomposition(p.to_primitive_int());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (intpoly::degree(factors[k]) <= 0) continue;
    for (auto r : isolate_real_roots_squarefree(factors[k])) {
      refine_root(factors[k], r, qtol);
      r.multiplicity = static_cast<int>(k) + 1;
      all.push_back(std::move(r));
    }
  }
  std::sort(all.begin(), all.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return all;
}

}  // namespace hesse
