#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"

// Dense univariate polynomials over Z, lowest degree first. These are the
// workhorse for everything exact: gcds, square-free parts, Sturm chains and
// the Descartes root counter all run on primitive integer polynomials.
namespace hesse::intpoly {

using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly trimmed(IntPoly p) {
  trim(p);
  return p;
}

inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const IntPoly& p) { return p.empty(); }
inline const BigInt& lc(const IntPoly& p) { return p.back(); }

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline IntPoly primitive(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  BigInt g = content(p);
  if (lc(p) < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline IntPoly scale(IntPoly p, const BigInt& k) {
  if (k == 0) return {};
  for (auto& c : p) c *= k;
  return p;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

inline IntPoly pow(const IntPoly& p, unsigned k) {
  IntPoly r{1};
  IntPoly base = p;
  while (k) {
    if (k & 1U) r = mul(r, base);
    k >>= 1U;
    if (k) base = mul(base, base);
  }
  return r;
}

inline IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

/// p(-x).
inline IntPoly reflect(IntPoly p) {
  for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
  return p;
}

/// p(x + 1), in place, O(n^2) additions.
inline void taylor_shift_one(IntPoly& p) {
  const std::size_t n = p.size();
  if (n < 2) return;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 2;; --j) {
      p[j] += p[j + 1];
      if (j == i) break;
    }
  }
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly prem(IntPoly a, const IntPoly& b) {
  if (b.empty()) throw Error(ErrorKind::ZeroPolynomial, "prem by zero polynomial");
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return a;
  int steps = degree(a) - db + 1;
  const BigInt& l = lc(b);
  while (!a.empty() && degree(a) >= db) {
    BigInt t = lc(a);
    const int shift = degree(a) - db;
    for (auto& c : a) c *= l;
    for (int i = 0; i <= db; ++i) a[i + shift] -= t * b[i];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : a) c *= f;
  }
  return a;
}

/// Exact division over Z; nullopt when b does not divide a.
inline std::optional<IntPoly> divide_exact(IntPoly a, const IntPoly& b) {
  if (b.empty()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  trim(a);
  if (a.empty()) return IntPoly{};
  const int db = degree(b);
  if (degree(a) < db) return std::nullopt;
  IntPoly q(a.size() - b.size() + 1);
  const BigInt& l = lc(b);
  for (int k = degree(a) - db; k >= 0; --k) {
    BigInt& top = a[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), l.get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), l.get_mpz_t());
    for (int i = 0; i <= db; ++i) mpz_submul(a[k + i].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
    q[k] = std::move(t);
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

inline IntPoly divide_exact_or_throw(const IntPoly& a, const IntPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return *q;
}

/// Sign of p(num / den) for den > 0, evaluated exactly.
inline int sign_at(const IntPoly& p, const BigInt& num, const BigInt& den) {
  if (p.empty()) return 0;
  BigInt acc = lc(p);
  BigInt dpow = 1;
  for (int i = degree(p) - 1; i >= 0; --i) {
    dpow *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), p[i].get_mpz_t(), dpow.get_mpz_t());
  }
  return sgn(acc);
}

inline int sign_at(const IntPoly& p, const BigRational& x) { return sign_at(p, x.get_num(), x.get_den()); }

inline int sign_at_pos_infinity(const IntPoly& p) { return p.empty() ? 0 : sgn(lc(p)); }
inline int sign_at_neg_infinity(const IntPoly& p) {
  if (p.empty()) return 0;
  return (degree(p) % 2 == 0) ? sgn(lc(p)) : -sgn(lc(p));
}

inline BigRational eval(const IntPoly& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a word-sized prime.

namespace detail {

struct ModP {
  std::uint64_t p;

  std::uint64_t reduce(const BigInt& z) const {
    return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = a + b;
    return r >= p ? r - p : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const {
    std::uint64_t r = 1;
    while (k) {
      if (k & 1U) r = mul(r, a);
      a = mul(a, a);
      k >>= 1U;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

using ModPoly = std::vector<std::uint64_t>;

inline void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline void make_monic(ModPoly& a, const ModP& f) {
  if (a.empty()) return;
  std::uint64_t li = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, li);
}

/// a mod b in place; b monic.
inline void rem_mod(ModPoly& a, const ModPoly& b, const ModP& f) {
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    std::uint64_t t = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (t != 0) {
      for (std::size_t i = 0; i <= db; ++i) a[i + shift] = f.sub(a[i + shift], f.mul(t, b[i]));
    }
    a.pop_back();
    trim_mod(a);
  }
}

inline ModPoly gcd_mod(ModPoly a, ModPoly b, const ModP& f) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    make_monic(b, f);
    rem_mod(a, b, f);
    std::swap(a, b);
  }
  make_monic(a, f);
  return a;
}

/// Deterministic sequence of 62-bit primes.
class PrimeStream {
 public:
  PrimeStream() {
    mpz_ui_pow_ui(cur_.get_mpz_t(), 2, 62);
    cur_ -= BigInt(1) << 24;
  }
  std::uint64_t next() {
    mpz_nextprime(cur_.get_mpz_t(), cur_.get_mpz_t());
    return static_cast<std::uint64_t>(cur_.get_ui());
  }

 private:
  BigInt cur_;
};

inline BigInt symmetric(const BigInt& r, const BigInt& m, const BigInt& half) { return r > half ? r - m : r; }

}  // namespace detail

/// gcd over Z with positive leading coefficient. Computed modulo a stream of
/// 62-bit primes and lifted by CRT; the result is certified by trial
/// division, so it is exact regardless of unlucky primes.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return b.empty() ? IntPoly{} : scale(primitive(b), content(b));
  if (b.empty()) return scale(primitive(a), content(a));
  BigInt cont;
  {
    BigInt ca = content(a), cb = content(b);
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (degree(a) == 0 || degree(b) == 0) return {cont};

  BigInt gamma;
  mpz_gcd(gamma.get_mpz_t(), lc(a).get_mpz_t(), lc(b).get_mpz_t());

  detail::PrimeStream primes;
  int best = std::min(degree(a), degree(b)) + 1;
  IntPoly acc;
  BigInt modulus;
  IntPoly previous;
  for (int iter = 0; iter < 100000; ++iter) {
    detail::ModP f{primes.next()};
    if (f.reduce(lc(a)) == 0 || f.reduce(lc(b)) == 0) continue;
    detail::ModPoly am(a.size()), bm(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) am[i] = f.reduce(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) bm[i] = f.reduce(b[i]);
    detail::ModPoly g = detail::gcd_mod(std::move(am), std::move(bm), f);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return {cont};
    if (dg > best) continue;
    const std::uint64_t gm = f.reduce(gamma);
    for (auto& c : g) c = f.mul(c, gm);
    BigInt pz(static_cast<unsigned long>(f.p));
    if (dg < best) {
      best = dg;
      acc.assign(g.size(), BigInt());
      for (std::size_t i = 0; i < g.size(); ++i) acc[i] = static_cast<unsigned long>(g[i]);
      modulus = pz;
      previous.clear();
    } else {
      // CRT: x = acc + modulus * ((g - acc) * modulus^-1 mod p).
      const std::uint64_t minv = f.inv(f.reduce(modulus));
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint64_t t = f.mul(f.sub(g[i], f.reduce(acc[i])), minv);
        mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
      }
      modulus *= pz;
    }
    BigInt half = modulus / 2;
    IntPoly cand(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) cand[i] = detail::symmetric(acc[i], modulus, half);
    if (cand == previous) {
      IntPoly g0 = primitive(cand);
      if (divide_exact(a, g0) && divide_exact(b, g0)) return scale(g0, cont);
    }
    previous = std::move(cand);
  }
  throw Error(ErrorKind::InvalidArgument, "modular gcd did not converge");
}

inline IntPoly squarefree_part(const IntPoly& p) {
  IntPoly q = primitive(p);
  if (degree(q) <= 0) return q;
  IntPoly g = gcd(q, derivative(q));
  if (degree(g) == 0) return q;
  return primitive(divide_exact_or_throw(q, primitive(g)));
}

/// Yun's algorithm. Entry k (0-based) holds the primitive product of the
/// irreducible factors of multiplicity k + 1; trailing units are dropped.
inline std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  IntPoly f = primitive(p);
  std::vector<IntPoly> out;
  if (degree(f) <= 0) return out;
  IntPoly df = derivative(f);
  IntPoly a = primitive(gcd(f, df));
  IntPoly b = divide_exact_or_throw(f, a);
  IntPoly c = divide_exact_or_throw(df, a);
  IntPoly d = sub(c, derivative(b));
  while (degree(b) > 0) {
    IntPoly g = primitive(gcd(b, d));
    if (g.empty()) g = b;
    out.push_back(primitive(g));
    IntPoly nb = divide_exact_or_throw(b, g);
    c = d.empty() ? IntPoly{} : divide_exact_or_throw(d, g);
    b = std::move(nb);
    d = sub(c, derivative(b));
  }
  while (!out.empty() && degree(out.back()) == 0) out.pop_back();
  return out;
}

}  // namespace hesse::intpoly
