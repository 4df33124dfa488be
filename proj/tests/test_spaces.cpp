#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "projlab/rng.hpp"
#include "projlab/spaces.hpp"
#include "test_support.hpp"

using namespace projlab;

namespace {

std::vector<double> random_abs(std::size_t n, CounterRng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.exponential() * (rng.uniform() < 0.2 ? 0.0 : 1.0);
  return v;
}

std::vector<SequenceSpace> zoo(std::size_t n) {
  std::vector<SequenceSpace> s{SequenceSpace::lr(n, 1),          SequenceSpace::lr(n, 1.5),
                               SequenceSpace::lr(n, 2),          SequenceSpace::lr(n, 4),
                               SequenceSpace::linf(n),           SequenceSpace::lorentz(n, 2, 1),
                               SequenceSpace::lorentz(n, 3, 2),  SequenceSpace::lorentz(n, 2, kInf),
                               SequenceSpace::lorentz(n, 1.5, 3)};
  std::vector<double> ex;
  for (std::size_t i = 0; i < n; ++i) ex.push_back(1.25 + 0.5 * static_cast<double>(i));
  s.push_back(SequenceSpace::nakano(ex));
  s.push_back(SequenceSpace::nakano_dual(ex));
  if (n % 2 == 0) {
    s.push_back(SequenceSpace::mixed(1, 2, 2, n / 2));
    s.push_back(SequenceSpace::mixed(3, 1.5, n / 2, 2));
  }
  return s;
}

}  // namespace

TEST(Norm, Examples) {
  std::vector<double> v{3, 4};
  EXPECT_NEAR(SequenceSpace::lr(2, 2).norm(std::span<const double>(v)), 5, 1e-15);
  EXPECT_NEAR(SequenceSpace::linf(2).norm(std::span<const double>(v)), 4, 0);
  std::vector<std::complex<double>> z{{3, 0}, {0, 4}};
  EXPECT_NEAR(SequenceSpace::lr(2, 2).norm(std::span<const std::complex<double>>(z)), 5, 1e-15);
  expect_error([] { std::vector<double> w{1, 2, 3}; SequenceSpace::lr(2, 2).norm(std::span<const double>(w)); },
               ErrorCode::DimensionMismatch);
}

TEST(Norm, LorentzDiagonalIsLr) {
  CounterRng rng(1, 0);
  for (double r : {1.5, 2.0, 3.0}) {
    SequenceSpace a = SequenceSpace::lorentz(6, r, r), b = SequenceSpace::lr(6, r);
    for (int t = 0; t < 200; ++t) {
      auto v = random_abs(6, rng);
      EXPECT_NEAR(a.norm_abs(v), b.norm_abs(v), 1e-12 * (1 + b.norm_abs(v)));
    }
  }
}

TEST(Norm, NakanoConstantExponentIsLr) {
  CounterRng rng(2, 0);
  for (double r : {1.0, 1.5, 2.0, 3.5}) {
    SequenceSpace a = SequenceSpace::nakano(std::vector<double>(5, r)), b = SequenceSpace::lr(5, r);
    for (int t = 0; t < 200; ++t) {
      auto v = random_abs(5, rng);
      EXPECT_NEAR(a.norm_abs(v), b.norm_abs(v), 1e-10 * (1 + b.norm_abs(v)));
    }
  }
}

TEST(Norm, NakanoIsMinkowskiFunctional) {
  SequenceSpace s = SequenceSpace::nakano({1.5, 2, 4});
  CounterRng rng(3, 0);
  for (int t = 0; t < 100; ++t) {
    auto v = random_abs(3, rng);
    double nv = s.norm_abs(v);
    if (nv == 0) continue;
    double mod = 0;
    for (std::size_t i = 0; i < 3; ++i) mod += std::pow(v[i] / nv, s.exponents()[i]);
    EXPECT_NEAR(mod, 1, 1e-10);
  }
}

TEST(Norm, Axioms) {
  CounterRng rng(4, 0);
  for (std::size_t n : {1u, 4u, 6u})
    for (const auto& s : zoo(n)) {
      // Lorentz with s > r is only a quasi-norm (increasing weights).
      bool normed = !(s.family() == SpaceFamily::Lorentz && s.s() > s.r());
      for (int t = 0; t < 60; ++t) {
        auto x = random_abs(n, rng), y = random_abs(n, rng);
        double lam = 0.1 + 5 * rng.uniform();
        std::vector<double> lx(n), sum(n), big(n);
        for (std::size_t i = 0; i < n; ++i) {
          lx[i] = lam * x[i];
          sum[i] = x[i] + y[i];
          big[i] = std::max(x[i], y[i]);
        }
        double nx = s.norm_abs(x), ny = s.norm_abs(y);
        EXPECT_NEAR(s.norm_abs(lx), lam * nx, 1e-10 * (1 + lam * nx)) << s.describe();
        if (normed) {
          EXPECT_LE(s.norm_abs(sum), (nx + ny) * (1 + 1e-10) + 1e-14) << s.describe();
        }
        EXPECT_GE(s.norm_abs(big), std::max(nx, ny) * (1 - 1e-10)) << s.describe();
      }
    }
}

TEST(Norm, PermutationInvariance) {
  CounterRng rng(5, 0);
  std::vector<SequenceSpace> sym{SequenceSpace::lr(5, 1.5), SequenceSpace::linf(5), SequenceSpace::lorentz(5, 2, 1),
                                 SequenceSpace::lorentz(5, 2, kInf)};
  for (const auto& s : sym)
    for (int t = 0; t < 50; ++t) {
      auto v = random_abs(5, rng);
      double base = s.norm_abs(v);
      std::sort(v.begin(), v.end());
      do {
        ASSERT_NEAR(s.norm_abs(v), base, 1e-12 * (1 + base));
      } while (std::next_permutation(v.begin(), v.end()) && rng.uniform() < 0.9);
    }
  // Mixed: swap rows, permute within a row.
  SequenceSpace m = SequenceSpace::mixed(1, 3, 2, 3);
  for (int t = 0; t < 50; ++t) {
    auto v = random_abs(6, rng);
    double base = m.norm_abs(v);
    std::vector<double> rows{v[3], v[4], v[5], v[0], v[1], v[2]};
    std::vector<double> inner{v[2], v[0], v[1], v[4], v[5], v[3]};
    EXPECT_NEAR(m.norm_abs(rows), base, 1e-12 * (1 + base));
    EXPECT_NEAR(m.norm_abs(inner), base, 1e-12 * (1 + base));
  }
}

TEST(Fundamental, Values) {
  for (std::size_t k = 1; k <= 7; ++k) {
    double dk = static_cast<double>(k);
    EXPECT_NEAR(SequenceSpace::lr(7, 3).fundamental(k), std::pow(dk, 1 / 3.0), 1e-14);
    EXPECT_NEAR(SequenceSpace::lorentz(7, 3, 1).fundamental(k), std::pow(dk, 1 / 3.0), 1e-13);
    EXPECT_NEAR(SequenceSpace::lorentz(7, 1.5, 4).fundamental(k), std::pow(dk, 1 / 1.5), 1e-12);
    EXPECT_NEAR(SequenceSpace::lorentz(7, 2, kInf).fundamental(k), std::sqrt(dk), 1e-13);
    EXPECT_EQ(SequenceSpace::linf(7).fundamental(k), 1.0);
  }
  expect_error([] { SequenceSpace::lr(3, 2).fundamental(4); }, ErrorCode::InvalidArgument);
  expect_error([] { SequenceSpace::lr(3, 2).fundamental(0); }, ErrorCode::InvalidArgument);
}

TEST(Fundamental, ProductWithDualIsK) {
  for (std::size_t k = 1; k <= 9; ++k) {
    double dk = static_cast<double>(k);
    for (double r : {1.0, 1.5, 2.0, 3.0, kInf}) {
      SequenceSpace s = SequenceSpace::lr(9, r);
      EXPECT_NEAR(s.fundamental(k) * s.kothe_dual().fundamental(k), dk, 1e-12 * dk);
      EXPECT_NEAR(s.fundamental(k) * s.dual_fundamental(k), dk, 1e-12 * dk);
    }
    for (double r : {1.5, 2.0, 4.0}) {
      SequenceSpace s = SequenceSpace::lorentz(9, r, 1);
      EXPECT_NEAR(s.fundamental(k) * s.dual_fundamental(k), dk, 1e-12 * dk);
    }
  }
}

TEST(KotheDual, Examples) {
  EXPECT_EQ(SequenceSpace::lr(3, 2).kothe_dual().describe(), SequenceSpace::lr(3, 2).describe());
  EXPECT_EQ(SequenceSpace::lr(3, 1).kothe_dual().family(), SpaceFamily::LInfty);
  EXPECT_EQ(SequenceSpace::linf(3).kothe_dual().describe(), SequenceSpace::lr(3, 1).describe());
  SequenceSpace md = SequenceSpace::mixed(1, 2, 4, 3).kothe_dual();
  EXPECT_EQ(md.family(), SpaceFamily::Mixed);
  EXPECT_TRUE(std::isinf(md.p()));
  EXPECT_EQ(md.q(), 2);
  EXPECT_EQ(SequenceSpace::nakano({2, 3}).kothe_dual().family(), SpaceFamily::NakanoDual);
  EXPECT_EQ(SequenceSpace::nakano({2, 3}).kothe_dual().kothe_dual().family(), SpaceFamily::Nakano);
  expect_error([] { SequenceSpace::lorentz(3, 2, 1).kothe_dual(); }, ErrorCode::DualNotImplemented);
  expect_error([] { SequenceSpace::nakano({1, 3}).kothe_dual(); }, ErrorCode::DualNotImplemented);
}

TEST(KotheDual, HolderOnRandomPairs) {
  CounterRng rng(6, 0);
  for (std::size_t n : {2u, 4u})
    for (const auto& s : zoo(n)) {
      if (s.family() == SpaceFamily::Lorentz) continue;
      if (s.family() == SpaceFamily::Nakano &&
          std::any_of(s.exponents().begin(), s.exponents().end(), [](double p) { return p <= 1; }))
        continue;
      SequenceSpace d = s.kothe_dual();
      for (int t = 0; t < 1000; ++t) {
        auto x = random_abs(n, rng), y = random_abs(n, rng);
        double pair = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        EXPECT_LE(pair, s.norm_abs(x) * d.norm_abs(y) * (1 + 1e-9) + 1e-14) << s.describe();
      }
    }
}

TEST(KotheDual, NakanoDualIsSharp) {
  // The dual norm is attained: for y, x_i = (y_i / (t p_i))^{1/(p_i-1)} scaled to the sphere.
  SequenceSpace s = SequenceSpace::nakano({1.5, 2, 3});
  SequenceSpace d = s.kothe_dual();
  CounterRng rng(7, 0);
  for (int t = 0; t < 20; ++t) {
    auto y = random_abs(3, rng);
    for (auto& v : y) v += 0.1;
    double best = 0;
    // Crude search over the positive part of the unit sphere as an independent lower bound.
    for (int k = 0; k < 20000; ++k) {
      std::vector<double> x{rng.exponential(), rng.exponential(), rng.exponential()};
      double nx = s.norm_abs(x);
      best = std::max(best, std::inner_product(x.begin(), x.end(), y.begin(), 0.0) / nx);
    }
    EXPECT_LE(best, d.norm_abs(y) * (1 + 1e-9));
    EXPECT_GE(best, d.norm_abs(y) * (1 - 2e-2));
  }
}

TEST(Descriptor, ParseRoundTrip) {
  for (const char* t : {"lr:2", "linf", "lorentz:2,1", "lorentz:2,inf", "nakano:1.5,2,3", "nakano-dual:1.5,2,3",
                        "mixed:1,2,4x3"}) {
    SequenceSpace s = parse_space(t, 3);
    EXPECT_EQ(parse_space(s.describe(), s.dimension()).describe(), s.describe()) << t;
  }
  EXPECT_EQ(parse_space("mixed:1,2,4x3", 1).dimension(), 12u);
  EXPECT_EQ(parse_space("lr:inf", 3).family(), SpaceFamily::LInfty);
  EXPECT_EQ(parse_space("nakano:1.5,2,3", 9).dimension(), 3u);
  expect_error([] { parse_space("lq:2", 3); }, ErrorCode::Parse);
  expect_error([] { parse_space("lr:abc", 3); }, ErrorCode::Parse);
  expect_error([] { parse_space("mixed:1,2,4", 3); }, ErrorCode::Parse);
  expect_error([] { parse_space("lr:0.5", 3); }, ErrorCode::InvalidArgument);
}

TEST(Rearrangement, StableDescending) {
  std::vector<double> v{1, 3, 2, 3, 0};
  EXPECT_EQ(decreasing_rearrangement(v), (std::vector<double>{3, 3, 2, 1, 0}));
}
