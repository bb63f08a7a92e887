#pragma once

#include <variant>
#include <vector>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/algebra/intpoly.hpp"
#include "hesse/algebra/unipoly.hpp"

namespace hesse {

/// Endpoint of a real interval: a rational or one of the two infinities.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  BigRational value = 0;

  static Bound neg_inf() { return {Kind::NegInf, 0}; }
  static Bound pos_inf() { return {Kind::PosInf, 0}; }
  static Bound at(const BigRational& v) { return {Kind::Finite, v}; }

  friend bool operator<(const Bound& a, const Bound& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.kind == Kind::Finite && a.value < b.value;
  }
};

/// Sturm chain built from a primitive pseudo-remainder sequence over Z.
/// Each element is divided by the final gcd so that multiple roots are
/// counted once and roots never zero the whole chain.
class SturmChain {
 public:
  explicit SturmChain(const intpoly::IntPoly& p) {
    using namespace intpoly;
    IntPoly s0 = primitive(p);
    if (s0.empty()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of zero polynomial");
    chain_.push_back(s0);
    IntPoly s1 = primitive(derivative(s0));
    while (!s1.empty()) {
      chain_.push_back(s1);
      const IntPoly& a = chain_[chain_.size() - 2];
      const IntPoly& b = chain_.back();
      IntPoly r = prem(a, b);
      // prem = lc(b)^(delta+1) * rem; keep a positive multiple of -rem.
      const int delta = degree(a) - degree(b);
      const bool flip = !(sgn(lc(b)) < 0 && (delta + 1) % 2 == 1);
      if (!r.empty()) {
        BigInt c = content(r);
        if (flip) c = -c;
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      }
      s1 = std::move(r);
    }
    const IntPoly g = chain_.back();
    if (degree(g) > 0) {
      for (auto& e : chain_) e = divide_exact_or_throw(e, g);
    }
  }

  std::size_t size() const { return chain_.size(); }
  const std::vector<intpoly::IntPoly>& elements() const { return chain_; }

  int variations(const Bound& x) const {
    int v = 0, last = 0;
    for (const auto& e : chain_) {
      int s = 0;
      switch (x.kind) {
        case Bound::Kind::NegInf: s = intpoly::sign_at_neg_infinity(e); break;
        case Bound::Kind::PosInf: s = intpoly::sign_at_pos_infinity(e); break;
        case Bound::Kind::Finite: s = intpoly::sign_at(e, x.value); break;
      }
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Distinct real roots in (lo, hi].
  std::size_t count(const Bound& lo, const Bound& hi) const {
    if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "empty interval for root count");
    return static_cast<std::size_t>(variations(lo) - variations(hi));
  }

 private:
  std::vector<intpoly::IntPoly> chain_;
};

/// Number of distinct real roots of p in (lo, hi], exact.
inline std::size_t sturm_count_real_roots(const UniPoly& p, const Bound& lo = Bound::neg_inf(),
                                          const Bound& hi = Bound::pos_inf()) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of zero polynomial");
  if (p.degree() == 0) return 0;
  return SturmChain(p.to_primitive_int()).count(lo, hi);
}

}  // namespace hesse
