#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hesse/curves/components.hpp"
#include "hesse/dynamics/chains.hpp"
#include "hesse/dynamics/counts.hpp"
#include "hesse/dynamics/hmap.hpp"
#include "hesse/dynamics/loops.hpp"
#include "hesse/dynamics/oracle.hpp"
#include "hesse/dynamics/orbit.hpp"

using namespace hesse;

namespace {

// Sum of d * Lambda_d over the even divisors d of 2r.
int divisor_sum_check(int r) {
  Count s = 0;
  for (int d = 1; d <= r; ++d) {
    if (r % d == 0) s += 2 * d * count_loops(2 * d);
  }
  return static_cast<int>(s);
}

}  // namespace

TEST(Step, ExactValuesAndInfinity) {
  EXPECT_EQ(step(ExtendedParam(-3)), ExtendedParam(-3));
  EXPECT_EQ(step(ExtendedParam(6)), ExtendedParam(-3));
  EXPECT_TRUE(step(ExtendedParam(0)).is_infinite());
  EXPECT_TRUE(step(ExtendedParam::infinity()).is_infinite());
  EXPECT_EQ(step(ExtendedParam(BigRational(1, 2))), ExtendedParam(BigRational(-865, 6)));
  const double c0 = 3 * (std::sqrt(3.0) - 1);
  EXPECT_NEAR(step(c0), -3 * (std::sqrt(3.0) + 1), 1e-12);
}

TEST(HMap, ParametersAndValues) {
  const HMapParams p;
  EXPECT_EQ(*p.phi_exact(), BigRational(-3));
  EXPECT_EQ(*p.kappa_exact(), BigRational(6));
  EXPECT_DOUBLE_EQ(h_eval(p, -3.0), -3.0);
  EXPECT_DOUBLE_EQ(h_eval(p, 6.0), -3.0);
  for (double x : {1e6, -1e6}) EXPECT_NEAR(h_eval(p, x), x / -3.0, 1e-4);
  EXPECT_THROW(h_eval(p, 0.0), Error);
  EXPECT_THROW(h_eval(p, BigRational(0)), Error);
  EXPECT_THROW(HMapParams(1, 0), Error);
}

TEST(HMap, Preimages) {
  const HMapParams p;
  const auto at_phi = preimages(p, -3.0);
  ASSERT_EQ(at_phi.size(), 2u);
  EXPECT_NEAR(at_phi[0].x, -3.0, 1e-9);
  EXPECT_EQ(at_phi[0].multiplicity, 1);
  EXPECT_NEAR(at_phi[1].x, 6.0, 1e-6);
  EXPECT_EQ(at_phi[1].multiplicity, 2);
  const auto below = preimages(p, -4.0);
  ASSERT_EQ(below.size(), 3u);
  for (const auto& q : below) {
    EXPECT_GT(q.x, -3.0);
    EXPECT_NEAR(h_eval(p, q.x), -4.0, 1e-9);
  }
  const auto above = preimages(p, 0.0);
  ASSERT_EQ(above.size(), 1u);
  EXPECT_LT(above[0].x, -3.0);
  EXPECT_NEAR(above[0].x, -std::cbrt(108.0), 1e-12);
}

TEST(HMap, SignAlternationAroundFixedPoint) {
  const HMapParams p;
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int t = 0; t < 1000; ++t) {
    const double x = u(rng);
    if (x == 0.0 || x == -3.0) continue;
    if (x > -3.0) {
      EXPECT_LT(h_eval(p, x), -3.0) << x;
    } else {
      EXPECT_GT(h_eval(p, x), -3.0) << x;
    }
  }
}

TEST(HMap, IterateAsymptote) {
  const HMapParams p;
  for (int n = 1; n <= 4; ++n) {
    double prev = std::numeric_limits<double>::infinity();
    for (double x : {1e4, 1e6}) {
      const double err = std::abs(h_iterate(p, x, n) - x / std::pow(-3.0, n));
      EXPECT_LT(err, prev);
      prev = err;
    }
    EXPECT_LT(prev, 1e-4);
  }
}

TEST(Counts, ClosedForms) {
  const std::vector<Count> chi{1, 2, 5, 8, 17, 26}, fix{1, 3, 1, 15, 1, 51}, rho{1, 3, 3, 9, 9, 27};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(count_critical_points(n), chi[n - 1]);
    EXPECT_EQ(count_fixed_points(n), fix[n - 1]);
    EXPECT_EQ(count_zeros(n), rho[n - 1]);
  }
  EXPECT_EQ(count_zeros(0), 1);
  const std::vector<Count> lambda{1, 3, 8, 18, 48, 116, 312, 810};
  for (int r = 1; r <= 8; ++r) EXPECT_EQ(count_loops(2 * r), lambda[r - 1]);
  EXPECT_EQ(count_loops(1), 1);
  EXPECT_EQ(count_loops(5), 0);
  EXPECT_THROW(count_loops(5, true), Error);
  EXPECT_EQ(count_chains(ChainTarget::Minus3, 3), 3);
  EXPECT_EQ(count_chains(ChainTarget::Infinity, 2), 1);
  EXPECT_EQ(count_chains(ChainTarget::Minus3, 6), 9);
}

TEST(Counts, Mobius) {
  const std::vector<int> mu{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(mobius(n), mu[n - 1]) << n;
}

TEST(Counts, LoopPartitionAndBounds) {
  for (int r = 1; r <= 8; ++r) EXPECT_EQ(divisor_sum_check(r), nontrivial_fixed_points_even(r));
  for (int r = 2; r <= 8; ++r) {
    const Count p3 = pow3(r);
    const Count lo = (p3 - 5 + 2 * r - 1) / (2 * r) + 2, hi = (p3 - 3) / r;
    EXPECT_LE(lo, count_loops(2 * r));
    EXPECT_LE(count_loops(2 * r), hi);
    EXPECT_LT(count_loops(2 * r - 2), count_loops(2 * r));
  }
}

TEST(Oracle, MatchesClosedFormsWithBothCounters) {
  for (int n = 1; n <= 4; ++n) {
    for (auto counter : {RootCounter::Descartes, RootCounter::Sturm}) {
      OracleOptions opt;
      opt.counter = counter;
      for (const auto& r : oracle_reports(n, opt)) EXPECT_TRUE(r.agreement()) << r.to_json().dump();
    }
  }
  EXPECT_EQ(oracle_count(CountKind::Fixed, 2), 3);
  EXPECT_EQ(oracle_count(CountKind::Zero, 3), 3);
  EXPECT_EQ(oracle_count(CountKind::Critical, 3), 5);
}

TEST(Oracle, BudgetAndTreeCounts) {
  OracleOptions opt;
  opt.nmax = 3;
  try {
    oracle_count(CountKind::Fixed, 4, opt);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(tree_count(CountKind::Critical, n), count_critical_points(n)) << n;
    EXPECT_EQ(tree_count(CountKind::Zero, n), count_zeros(n)) << n;
  }
}

TEST(Oracle, CriticalValuesCollapseOntoFixedPoint) {
  const HMapParams p;
  for (int n = 1; n <= 4; ++n) {
    const auto f = h_iterate_map(p, n);
    const auto crit = oracle_points(f, CountKind::Critical);
    EXPECT_EQ(static_cast<Count>(crit.size()), count_critical_points(n));
    for (const auto& r : crit) {
      BigRational x = r.midpoint();
      for (int k = 0; k < n; ++k) x = h_eval(p, x);
      EXPECT_NEAR(x.get_d(), -3.0, 1e-6);
    }
    // Conversely h^(n)(x) = -3 only at -3 and at critical points.
    for (const auto& r : level_set(f, BigRational(-3))) {
      const double v = r.value();
      const bool known = std::abs(v + 3) < 1e-9 || std::any_of(crit.begin(), crit.end(), [&](const RealRoot& c) {
                           return std::abs(c.value() - v) < 1e-9;
                         });
      EXPECT_TRUE(known) << v;
    }
  }
}

TEST(Loops, ExactSmallPeriods) {
  const std::vector<std::size_t> expect{1, 1, 0, 3};  // n = 1 is the trivial loop
  for (int n = 1; n <= 4; ++n) {
    const auto s = enumerate_loops(n);
    EXPECT_EQ(s.cycles.size(), expect[n - 1]) << n;
    for (const auto& c : s.cycles) {
      EXPECT_EQ(static_cast<int>(c.values.size()), n);
      EXPECT_LT(c.closure_residual(), 1e-8);
    }
  }
  const auto two = enumerate_loops(2);
  ASSERT_EQ(two.cycles.size(), 1u);
  EXPECT_NEAR(two.cycles[0].values[0], 3 * (std::sqrt(3.0) - 1), 1e-9);
  EXPECT_NEAR(two.cycles[0].values[1], -3 * (std::sqrt(3.0) + 1), 1e-9);
}

TEST(Loops, FloatModeAgreesWithFormula) {
  for (int n = 2; n <= 10; ++n) {
    const auto s = enumerate_loops(n, LoopMode::Float);
    EXPECT_EQ(static_cast<Count>(s.cycles.size()), count_loops(n)) << n;
    if (n % 2 == 0) EXPECT_EQ(static_cast<Count>(s.fixed_points), count_fixed_points(n));
  }
  EXPECT_THROW(enumerate_loops(11, LoopMode::Float), Error);
}

TEST(Chains, CountsAndMinimality) {
  for (auto t : {ChainTarget::Minus3, ChainTarget::Infinity}) {
    for (int n = 1; n <= 6; ++n) {
      const auto s = enumerate_chains(t, n);
      EXPECT_EQ(static_cast<Count>(s.starts.size()), count_chains(t, n)) << to_string(t) << " " << n;
      for (double c : s.starts) EXPECT_EQ(chain_length(c, t), n);
    }
  }
  EXPECT_DOUBLE_EQ(enumerate_chains(ChainTarget::Minus3, 1).starts.at(0), 6.0);
  EXPECT_DOUBLE_EQ(enumerate_chains(ChainTarget::Infinity, 1).starts.at(0), 0.0);
}

TEST(Chains, BackwardGrowth) {
  const auto w = backward_growth_witness(100);
  EXPECT_GT(std::abs(w.c), 100);
  EXPECT_EQ(chain_length(w.c, ChainTarget::Minus3), w.n);
  for (std::size_t k = 1; k < w.backward.size(); ++k) {
    const double c = w.backward[k - 1], prev = w.backward[k];
    if (c >= 6) EXPECT_LT(prev, -3 * c);
    if (c <= -6) EXPECT_GT(prev, -3 * c - 1);
  }
  EXPECT_THROW(backward_growth_witness(-1), Error);
}

TEST(Orbit, Terminals) {
  const auto zero = orbit(0, 10);
  EXPECT_EQ(zero.terminal, Terminal::FixedInfinity);
  EXPECT_EQ(zero.at, 1);
  ASSERT_EQ(zero.states.size(), 2u);
  EXPECT_TRUE(zero.states[1].is_infinite());
  EXPECT_EQ(orbit(6, 10).terminal, Terminal::FixedMinus3);
  EXPECT_EQ(orbit(6, 10).at, 1);
  EXPECT_EQ(orbit(-3, 10).at, 0);
  const auto open = orbit(BigRational(1, 2), 4);
  EXPECT_EQ(open.terminal, Terminal::Open);
  for (const auto& s : open.states) EXPECT_TRUE(s.is_rational());
  const auto cyc = orbit(3 * (std::sqrt(3.0) - 1), 6, 1e-9);
  EXPECT_EQ(cyc.terminal, Terminal::Periodic);
  EXPECT_EQ(cyc.period, 2);
}

TEST(Orbit, ComponentCountAlternates) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int t = 0; t < 30; ++t) {
    const BigRational c0 = BigRational(num(rng)) / den(rng);
    if (c0 == 0 || c0 == -3) continue;
    const auto rec = orbit(c0, 5);
    for (std::size_t k = 1; k < rec.states.size(); ++k) {
      const auto& u = rec.states[k - 1];
      const auto& v = rec.states[k];
      if (u.is_infinite() || v.is_infinite() || u == ExtendedParam(0) || v == ExtendedParam(0)) break;
      if (u == ExtendedParam(-3) || v == ExtendedParam(-3)) break;
      EXPECT_EQ(component_count_hesse_form(u) + component_count_hesse_form(v), 3);
    }
  }
}
