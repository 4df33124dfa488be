#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "projlab/boolean.hpp"
#include "projlab/polynomial.hpp"
#include "test_support.hpp"

using namespace projlab;
using std::numbers::e;
using std::numbers::pi;

namespace {

// K_d(k; N) = sum_j (-1)^j C(k, j) C(N-k, d-j): the value of sum_{|S|=d} chi_S at k minus signs.
BigInt krawtchouk(unsigned d, unsigned k, unsigned n) {
  BigInt s = 0;
  for (unsigned j = 0; j <= std::min(d, k); ++j) {
    if (d - j > n - k) continue;
    BigInt t = binomial(k, j) * binomial(n - k, d - j);
    s += (j % 2 == 0) ? t : BigInt(-t);
  }
  return s;
}

// Exact sum over the cube of |sum_{S in family} chi_S| for symmetric families, by layers.
BigInt layered_abs_sum(unsigned n, const std::vector<unsigned>& degrees) {
  BigInt total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt v = 0;
    for (unsigned d : degrees) v += krawtchouk(d, k, n);
    total += binomial(n, k) * (v < 0 ? BigInt(-v) : v);
  }
  return total;
}

BigInt brute_abs_sum(unsigned n, const std::vector<std::uint64_t>& masks) {
  BigInt total = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    long long v = 0;
    for (auto s : masks) v += (std::popcount(x & s) % 2 == 0) ? 1 : -1;
    total += std::llabs(v);
  }
  return total;
}

// Hermite He_d by the three-term recurrence, then midpoint quadrature of |He_d / d!| against phi.
double hermite_limit(unsigned d) {
  double fact = std::tgamma(d + 1.0);
  auto he = [d](double t) {
    double a = 1, b = t;
    if (d == 0) return a;
    for (unsigned k = 1; k < d; ++k) {
      double c = t * b - k * a;
      a = b;
      b = c;
    }
    return b;
  };
  const int n = 600000;
  const double lo = -16, h = 32.0 / n;
  double s = 0;
  for (int i = 0; i < n; ++i) {
    double t = lo + (i + 0.5) * h;
    s += std::abs(he(t)) * std::exp(-0.5 * t * t);
  }
  return s * h / (fact * std::sqrt(2 * pi));
}

}  // namespace

TEST(BooleanExact, Examples) {
  EXPECT_EQ(boolean_proj_exact(SubsetFamily::custom(3, {0})), 1.0);
  EXPECT_NEAR(boolean_proj_exact(SubsetFamily::homog(3, 1)), 1.5, 1e-15);
  EXPECT_NEAR(boolean_proj_exact(SubsetFamily::homog(2, 2)), 1.0, 1e-15);
}

TEST(BooleanExact, MatchesKrawtchoukLayers) {
  for (unsigned n = 1; n <= 16; ++n)
    for (unsigned d = 1; d <= std::min(n, 4u); ++d) {
      BooleanSums h = boolean_exact_sums(SubsetFamily::homog(n, d));
      EXPECT_EQ(h.abs_sum, layered_abs_sum(n, {d})) << n << "," << d;
      std::vector<unsigned> upto;
      for (unsigned j = 0; j <= d; ++j) upto.push_back(j);
      EXPECT_EQ(boolean_exact_sums(SubsetFamily::up_to(n, d)).abs_sum, layered_abs_sum(n, upto)) << n << "," << d;
    }
}

TEST(BooleanExact, CustomFamilyMatchesBruteForce) {
  std::vector<std::uint64_t> masks{0b1, 0b110, 0b1011, 0b111111, 0b100100, 0};
  SubsetFamily f = SubsetFamily::custom(6, masks);
  EXPECT_EQ(boolean_exact_sums(f).abs_sum, brute_abs_sum(6, masks));
  EXPECT_EQ(boolean_exact_sums(f, 3).abs_sum, brute_abs_sum(6, masks));
}

TEST(BooleanExact, HomogOneIsRealL1) {
  for (unsigned n = 1; n <= 15; n += 2) {
    double g = 2 / std::sqrt(pi) * std::exp(std::lgamma((n + 2) / 2.0) - std::lgamma((n + 1) / 2.0));
    EXPECT_NEAR(boolean_proj_exact(SubsetFamily::homog(n, 1)), g, 1e-10) << n;
  }
}

TEST(BooleanExact, WorkersDoNotChangeTheSum) {
  SubsetFamily f = SubsetFamily::homog(14, 3);
  BooleanSums a = boolean_exact_sums(f, 1), b = boolean_exact_sums(f, 4);
  EXPECT_EQ(a.abs_sum, b.abs_sum);
  EXPECT_EQ(a.square_sum, b.square_sum);
}

TEST(BooleanProperty, ParsevalAndBounds) {
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned d = 1; d <= std::min(n, 4u); ++d)
      for (const SubsetFamily& f : {SubsetFamily::homog(n, d), SubsetFamily::up_to(n, d)}) {
        BooleanSums s = boolean_exact_sums(f);
        EXPECT_NEAR(s.mean_square(), static_cast<double>(f.size()), 1e-9);
        double lam = s.mean_abs(), root = std::sqrt(static_cast<double>(f.size()));
        EXPECT_LE(lam, root * (1 + 1e-12)) << f.describe();
        EXPECT_GE(lam, root / std::pow(e, d)) << f.describe();
      }
}

TEST(BooleanProperty, KlimekFactor) {
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned d = 1; d <= std::min(n, 4u); ++d)
      EXPECT_LE(boolean_proj_exact(SubsetFamily::homog(n, d)),
                std::pow(1 + std::sqrt(2.0), d) * boolean_proj_exact(SubsetFamily::up_to(n, d)));
}

TEST(BooleanProperty, HomogTwoConverges) {
  // The exact values oscillate with N (e.g. N = 9 sits far below N = 8), so the test checks that the
  // worst deviation over consecutive windows shrinks.
  const double limit = std::sqrt(2 / (pi * e));
  std::vector<double> worst(3, 0);
  double last = 0;
  for (unsigned n = 8; n <= 24; ++n) {
    last = boolean_proj_exact(SubsetFamily::homog(n, 2)) / n;
    std::size_t w = n <= 12 ? 0 : n <= 18 ? 1 : 2;
    worst[w] = std::max(worst[w], std::abs(last - limit));
  }
  EXPECT_GT(worst[0], worst[1]);
  EXPECT_GT(worst[1], worst[2]);
  EXPECT_LT(std::abs(last - limit) / limit, 0.05);
}

TEST(BooleanExact, LargeCubeNeedsMonteCarlo) {
  expect_error([] { boolean_proj_exact(SubsetFamily::homog(kMaxExactCube + 1, 1)); }, ErrorCode::UseMonteCarlo);
}

TEST(BooleanMc, AgreesWithExact) {
  SubsetFamily f = SubsetFamily::homog(12, 2);
  MCEstimate m = boolean_proj_mc(f, 200000, 3);
  EXPECT_NEAR(m.mean, boolean_proj_exact(f), 5 * m.std_error);
  MCEstimate big = boolean_proj_mc(SubsetFamily::homog(40, 1), 20000, 3);
  EXPECT_NEAR(big.mean, 2 / std::sqrt(pi) * std::exp(std::lgamma(21.0) - std::lgamma(20.5)), 5 * big.std_error);
}

TEST(Family, ParseAndShape) {
  SubsetFamily h = parse_family("homog:2", 5);
  EXPECT_EQ(h.size(), 10u);
  for (auto m : h.sets()) EXPECT_EQ(std::popcount(m), 2);
  EXPECT_EQ(parse_family("upto:2", 5).size(), 16u);
  EXPECT_EQ(parse_family("[0, 3, 5]", 3).size(), 3u);
  expect_error([] { parse_family("[8]", 3); }, ErrorCode::InvalidArgument);
  expect_error([] { parse_family("bogus", 3); }, ErrorCode::Parse);
}

TEST(Pd, Examples) {
  auto eq = [](const UniPoly& p, std::vector<double> c) {
    ASSERT_EQ(p.coeffs.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(p.coeffs[i], c[i], 1e-15) << i;
  };
  eq(pd_polynomial(0), {1});
  eq(pd_polynomial(1), {0, 1});
  eq(pd_polynomial(2), {-0.5, 0, 0.5});
  eq(pd_polynomial(3), {0, -0.5, 0, 1.0 / 6});
  // P_d = He_d / d!.
  eq(pd_polynomial(5), {0, 15.0 / 120, 0, -10.0 / 120, 0, 1.0 / 120});
}

TEST(Pd, LeadingCoefficientAndRecursion) {
  for (unsigned d = 0; d <= 20; ++d) {
    RationalPoly p = pd_polynomial_exact(d);
    ASSERT_EQ(p.size(), d + 1);
    EXPECT_EQ(p[d], Rational(1, static_cast<long long>(factorial(d))));
    // t^d/d! - sum_k P_{d-2k} / (k! 2^k).
    RationalPoly r(d + 1, Rational(0));
    r[d] = p[d];
    for (unsigned k = 1; 2 * k <= d; ++k) {
      RationalPoly q = pd_polynomial_exact(d - 2 * k);
      Rational c = Rational(1) / Rational(factorial(k) * (BigInt(1) << k));
      for (std::size_t i = 0; i < q.size(); ++i) r[i] -= c * q[i];
    }
    EXPECT_EQ(p, r) << d;
  }
  expect_error([] { pd_polynomial(21); }, ErrorCode::InvalidArgument);
}

TEST(Limit, ClosedValues) {
  EXPECT_NEAR(boolean_limit(1), std::sqrt(2 / pi), 1e-12);
  EXPECT_NEAR(boolean_limit(2), std::sqrt(2 / (pi * e)), 1e-12);
  EXPECT_NEAR(boolean_limit(3), (1 + 4 * std::exp(-1.5)) / (3 * std::sqrt(2 * pi)), 1e-12);
}

TEST(Limit, MatchesHermiteQuadrature) {
  for (unsigned d = 1; d <= 8; ++d) EXPECT_NEAR(boolean_limit(d), hermite_limit(d), 1e-9) << d;
  EXPECT_NEAR(boolean_limit(4) * std::sqrt(2 * pi), 0.29250266, 1e-8);
  EXPECT_NEAR(boolean_limit(6) * std::sqrt(2 * pi), 0.04809801, 1e-8);
}

TEST(Limit, FiniteCubesApproach) {
  // |sum_{|S|=d} chi_S| / N^{d/2} at N = 24 is already close to the limit for d = 3.
  double r = boolean_proj_exact(SubsetFamily::homog(24, 3)) / std::pow(24.0, 1.5);
  EXPECT_NEAR(r, boolean_limit(3), 0.15 * boolean_limit(3));
}

TEST(Cdkn, Examples) {
  for (unsigned n = 2; n <= 14; ++n) EXPECT_EQ(cdkn_exact(2, 1, n), BigInt(n));
  for (auto [d, k, n] : {std::tuple{4u, 1u, 10u}, std::tuple{4u, 2u, 10u}, std::tuple{6u, 2u, 12u}}) {
    BigInt main = binomial(n - d + 2 * k, k) * factorial(d) / (BigInt(1) << k);
    BigInt c = cdkn_exact(d, k, n);
    EXPECT_GE(c, main);
    BigInt nk = 1;
    for (unsigned i = 1; i < k; ++i) nk *= n;
    EXPECT_LE(c - main, nk * 2 * d * factorial(d));
  }
  double ratio = static_cast<double>(cdkn_exact(4, 1, 14)) / 14 / (24.0 / 2);
  EXPECT_NEAR(ratio, 1, 0.1);
  expect_error([] { cdkn_exact(4, 3, 10); }, ErrorCode::InvalidArgument);
  expect_error([] { cdkn_exact(4, 1, 15); }, ErrorCode::BudgetExceeded);
}
