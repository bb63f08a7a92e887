#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/cubic.hpp"
#include "hesse/algebra/homogeneous.hpp"
#include "hesse/algebra/intpoly.hpp"
#include "hesse/algebra/qsqrt3.hpp"
#include "hesse/algebra/rational_map.hpp"
#include "hesse/algebra/real_roots.hpp"
#include "hesse/algebra/sturm.hpp"
#include "hesse/algebra/unipoly.hpp"

using namespace hesse;
using intpoly::IntPoly;

namespace {

// Product of (x - r) over integer roots r and (x^2 + k) over positive k.
IntPoly from_factors(const std::vector<int>& roots, const std::vector<int>& quads = {}) {
  IntPoly p{1};
  for (int r : roots) p = intpoly::mul(p, IntPoly{-r, 1});
  for (int k : quads) p = intpoly::mul(p, IntPoly{k, 0, 1});
  return p;
}

}  // namespace

TEST(Rational, ParsesFractionsDecimalsAndExponents) {
  EXPECT_EQ(parse_rational("-3/6"), BigRational(-1, 2));
  EXPECT_EQ(parse_rational("0.25"), BigRational(1, 4));
  EXPECT_EQ(parse_rational("1.5e2"), BigRational(150));
  EXPECT_EQ(parse_rational(" 7 "), BigRational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_EQ(to_string(BigRational(-6) / 4), "-3/2");
}

TEST(Rational, ExactCubeRoots) {
  EXPECT_EQ(*exact_cbrt(BigRational(-27)), BigRational(-3));
  EXPECT_EQ(*exact_cbrt(BigRational(216)), BigRational(6));
  EXPECT_EQ(*exact_cbrt(BigRational(8, 27)), BigRational(2, 3));
  EXPECT_FALSE(exact_cbrt(BigRational(2)).has_value());
}

TEST(IntPoly, GcdRecoversCommonFactor) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> common{d(rng), d(rng)}, ra{d(rng) + 50, d(rng) + 100}, rb{d(rng) - 50, d(rng) - 100};
    std::vector<int> all_a = common, all_b = common;
    all_a.insert(all_a.end(), ra.begin(), ra.end());
    all_b.insert(all_b.end(), rb.begin(), rb.end());
    const IntPoly a = intpoly::scale(from_factors(all_a, {3}), 6);
    const IntPoly b = intpoly::scale(from_factors(all_b, {3}), 10);
    const IntPoly g = intpoly::gcd(a, b);
    const IntPoly expect = intpoly::primitive(from_factors(common, {3}));
    EXPECT_EQ(intpoly::primitive(g), expect);
  }
}

TEST(IntPoly, SquarefreeDecompositionMultiplicities) {
  const IntPoly p = intpoly::mul(intpoly::mul(from_factors({1}), intpoly::pow(from_factors({2}), 2)),
                                 intpoly::pow(from_factors({-5}, {1}), 3));
  const auto parts = intpoly::squarefree_decomposition(p);
  ASSERT_GE(parts.size(), 3u);
  EXPECT_EQ(intpoly::primitive(parts[0]), from_factors({1}));
  EXPECT_EQ(intpoly::primitive(parts[1]), from_factors({2}));
  EXPECT_EQ(intpoly::primitive(parts[2]), from_factors({-5}, {1}));
  EXPECT_EQ(intpoly::primitive(intpoly::squarefree_part(p)), intpoly::primitive(from_factors({1, 2, -5}, {1})));
}

TEST(IntPoly, ExactDivisionAndTaylorShift) {
  const IntPoly a = from_factors({3, 4});
  EXPECT_EQ(*intpoly::divide_exact(a, from_factors({3})), from_factors({4}));
  EXPECT_FALSE(intpoly::divide_exact(a, from_factors({5})).has_value());
  IntPoly p = from_factors({2});
  intpoly::taylor_shift_one(p);
  EXPECT_EQ(p, from_factors({1}));
}

TEST(RootCounting, DescartesAndSturmAgreeWithConstruction) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-40, 40), q(1, 9), nr(0, 6), nq(0, 3);
  for (int t = 0; t < 60; ++t) {
    std::set<int> roots;
    const int k = nr(rng);
    while (static_cast<int>(roots.size()) < k) roots.insert(d(rng));
    std::vector<int> rs(roots.begin(), roots.end()), qs;
    for (int i = nq(rng); i > 0; --i) qs.push_back(q(rng));
    IntPoly p = from_factors(rs, qs);
    if (!rs.empty()) p = intpoly::mul(p, from_factors({rs.front()}));  // one double root
    if (intpoly::degree(p) < 1) continue;
    EXPECT_EQ(count_distinct_real_roots(p), rs.size());
    EXPECT_EQ(sturm_count_real_roots(UniPoly::from_int(p)), rs.size());
  }
}

TEST(RootCounting, SturmCountsOnHalfOpenIntervals) {
  const UniPoly p = UniPoly::from_int(from_factors({-2, 1, 3}));
  EXPECT_EQ(sturm_count_real_roots(p, Bound::at(1), Bound::at(3)), 1u);  // (1, 3]
  EXPECT_EQ(sturm_count_real_roots(p, Bound::at(0), Bound::pos_inf()), 2u);
  EXPECT_EQ(sturm_count_real_roots(p, Bound::neg_inf(), Bound::at(-2)), 1u);
}

TEST(RootIsolation, RefinedRootsAndMultiplicities) {
  // x^3 - 9x^2 + 108 = (x + 3)(x - 6)^2.
  const auto roots = isolate_real_roots(UniPoly{108, 0, -9, 1}, 1e-12);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0].value(), -3.0, 1e-12);
  EXPECT_EQ(roots[0].multiplicity, 1);
  EXPECT_NEAR(roots[1].value(), 6.0, 1e-12);
  EXPECT_EQ(roots[1].multiplicity, 2);
  // x^2 - 2: irrational roots bracket sqrt2.
  const auto r2 = isolate_real_roots(UniPoly{-2, 0, 1}, 1e-15);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_NEAR(r2[1].value(), std::sqrt(2.0), 1e-14);
  EXPECT_TRUE(r2[1].lo * r2[1].lo < 2 && r2[1].hi * r2[1].hi > 2);
}

TEST(Cubic, RepeatedRootsStayReal) {
  const auto r = solve_cubic(1.0, -9.0, 0.0, 108.0);
  std::vector<double> re;
  for (const auto& z : r) {
    EXPECT_LE(std::abs(z.imag()), 1e-9);
    re.push_back(z.real());
  }
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -3.0, 1e-9);
  EXPECT_NEAR(re[1], 6.0, 1e-6);
  EXPECT_NEAR(re[2], 6.0, 1e-6);
}

TEST(Cubic, OneRealRootAndConjugatePair) {
  // t^3 + 3t^2 + 1 has discriminant -135.
  const auto r = solve_cubic(1.0, 3.0, 0.0, 1.0);
  int real = 0;
  Complex prod = 1.0;
  for (const auto& z : r) {
    real += std::abs(z.imag()) < 1e-9;
    prod *= z;
  }
  EXPECT_EQ(real, 1);
  EXPECT_NEAR(prod.real(), -1.0, 1e-12);
  EXPECT_NEAR(prod.imag(), 0.0, 1e-12);
}

TEST(Cubic, VietaOnRandomComplexCoefficients) {
  std::mt19937 rng(3);
  std::normal_distribution<double> n;
  for (int t = 0; t < 200; ++t) {
    const Complex c3(n(rng), n(rng)), c2(n(rng), n(rng)), c1(n(rng), n(rng)), c0(n(rng), n(rng));
    const auto r = solve_cubic(c3, c2, c1, c0);
    EXPECT_LT(std::abs(r[0] + r[1] + r[2] + c2 / c3), 1e-9 * (1 + std::abs(c2 / c3)));
    EXPECT_LT(std::abs(r[0] * r[1] * r[2] + c0 / c3), 1e-9 * (1 + std::abs(c0 / c3)));
  }
  EXPECT_THROW(solve_cubic(0.0, 1.0, 1.0, 1.0), Error);
}

TEST(QSqrt3, FieldArithmeticAndOrder) {
  const QSqrt3 s = QSqrt3::sqrt3();
  EXPECT_EQ(s * s, QSqrt3(3));
  const QSqrt3 b0 = parse_qsqrt3("3+2*sqrt3");
  EXPECT_EQ(b0 * b0.conjugate(), QSqrt3(-3));
  EXPECT_EQ(b0 / b0, QSqrt3(1));
  EXPECT_TRUE(QSqrt3(BigRational(17, 10)) < s);
  EXPECT_TRUE(s < QSqrt3(BigRational(174, 100)));
  EXPECT_EQ(parse_qsqrt3("-1/2-1/2*sqrt3"), QSqrt3(BigRational(-1, 2), BigRational(-1, 2)));
  EXPECT_EQ(parse_qsqrt3("sqrt3"), s);
  EXPECT_NEAR(b0.to_double(), 3 + 2 * std::sqrt(3.0), 1e-15);
}

TEST(RationalMap, CompositionMatchesPointwiseEvaluation) {
  const auto h = RationalMap1::hesse_h(108, -3);
  const auto h3 = iterate_rational(h, 3);
  EXPECT_EQ(h3.degree(), 27);
  for (int k : {1, 2, 5, -7}) {
    BigRational x(k, 3);
    BigRational y = x;
    for (int i = 0; i < 3; ++i) y = h(y);
    EXPECT_EQ(h3(x), y);
  }
  EXPECT_THROW(h(BigRational(0)), Error);
}

TEST(HomogForm, DeterminantOfDiagonalLinearForms) {
  const auto x = linear_form<BigRational>(1, 0, 0), y = linear_form<BigRational>(0, 1, 0), z = linear_form<BigRational>(0, 0, 1);
  LinearForm3<BigRational> o;
  const auto d = det3_linear<BigRational>({{{x, o, o}, {o, y, o}, {o, o, z}}});
  using Cubic = HomogForm<BigRational, 3>;
  const std::size_t xyz = Cubic::index(1, 1, 1);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(d[i], BigRational(i == xyz ? 1 : 0));
  EXPECT_EQ(Cubic::monomial_name(2), "x2z");
}
