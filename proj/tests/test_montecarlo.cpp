#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "projlab/closedforms.hpp"
#include "projlab/indexsets.hpp"
#include "projlab/montecarlo.hpp"
#include "test_support.hpp"

using namespace projlab;
using std::numbers::pi;

namespace {

MultiIndex mi(std::vector<unsigned> v) { return MultiIndex(std::move(v)); }

// Mean within k standard errors, with a floor for zero-variance estimators.
void expect_within(const MCEstimate& e, double target, double k = 5) {
  EXPECT_NEAR(e.mean, target, k * e.std_error + 1e-12) << "stderr " << e.std_error;
}

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace

TEST(Torus, CharactersAreOrthonormal) {
  CounterRng rng(11, 0);
  std::vector<std::complex<double>> z;
  const int n = 200000;
  std::complex<double> cross = 0;
  double self = 0;
  for (int i = 0; i < n; ++i) {
    sample_torus(3, rng, z);
    auto a = z[0] * z[0] * z[2], b = z[1] * z[2];
    cross += a * std::conj(b);
    self += std::norm(a);
    ASSERT_NEAR(std::abs(z[1]), 1, 1e-14);
  }
  EXPECT_LT(std::abs(cross / double(n)), 5 / std::sqrt(double(n)));
  EXPECT_NEAR(self / n, 1, 1e-12);
}

TEST(Torus, SingleMonomialHasModulusOne) {
  IndexSet j(3, {mi({2, 0, 1})});
  MCEstimate e = torus_exp_sum(j, 1000, 5);
  EXPECT_NEAR(e.mean, 1, 1e-12);
  EXPECT_LT(e.std_error, 1e-12);
}

TEST(Torus, ParsevalForSquaredModulus) {
  IndexSet j = enumerate_full(2, 3);
  MCEstimate e = torus_exp_sum(j, 100000, 3, 1, 2);
  expect_within(e, static_cast<double>(j.size()));
}

TEST(Torus, FirstMomentBelowParseval) {
  IndexSet j = enumerate_full_up_to(2, 2);
  MCEstimate e = torus_exp_sum(j, 50000, 4);
  EXPECT_LT(e.mean, std::sqrt(static_cast<double>(j.size())));
  EXPECT_GT(e.mean, 1);
}

TEST(Torus, OneVariableIsAnalyticLebesgue) {
  IndexSet j = enumerate_full_up_to(4, 1);
  expect_within(torus_exp_sum(j, 200000, 8), lebesgue_constant(4, true));
}

TEST(Haar, SecondMomentsOfEntriesAndTrace) {
  for (std::size_t n : {2u, 3u, 5u}) {
    CounterRng rng(21, n);
    const int samples = 40000;
    double u11 = 0, tr2 = 0;
    std::complex<double> cross = 0;
    for (int i = 0; i < samples; ++i) {
      Eigen::MatrixXcd u = sample_haar_unitary(n, rng);
      ASSERT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm(), 1e-12);
      u11 += std::norm(u(0, 0));
      tr2 += std::norm(u.trace());
      cross += u(0, 0) * std::conj(u(1, 1));
    }
    EXPECT_NEAR(u11 / samples, 1.0 / n, 5 / std::sqrt(double(samples)) / n);
    EXPECT_NEAR(tr2 / samples, 1, 0.03);
    EXPECT_LT(std::abs(cross / double(samples)), 5 / std::sqrt(double(samples)) / n);
  }
  expect_within(haar_trace_moment(4, 2, 50000, 9), 1);
  // E|tr U|^4 = 2 once n >= 2.
  expect_within(haar_trace_moment(3, 4, 50000, 9), 2);
}

TEST(Haar, TwoByTwoFirstMoment) {
  expect_within(haar_trace_moment(2, 1, 200000, 12), 8 / (3 * pi));
}

TEST(Haar, UncorrectedQrIsRejected) {
  // Without the phase fix E tr U drifts far from 0; the corrected sampler does not.
  for (bool fix : {true, false}) {
    CounterRng rng(31, 0);
    std::complex<double> tr = 0;
    const int samples = 20000;
    for (int i = 0; i < samples; ++i) tr += sample_haar_unitary(2, rng, fix).trace();
    double m = std::abs(tr / double(samples));
    if (fix) {
      EXPECT_LT(m, 5 * std::sqrt(1.0 / samples));
    } else {
      EXPECT_GT(m, 0.3);
    }
  }
}

TEST(Haar, LeftInvariance) {
  CounterRng rng(41, 0), rng2(41, 1);
  Eigen::MatrixXcd v = sample_haar_unitary(3, rng2);
  std::vector<double> a, b;
  for (int i = 0; i < 20000; ++i) {
    a.push_back(std::abs((v * sample_haar_unitary(3, rng)).trace()));
    b.push_back(std::abs(sample_haar_unitary(3, rng2).trace()));
  }
  // Critical value at level 1e-3 for equal sizes: 1.95 sqrt(2/n).
  EXPECT_LT(ks_statistic(a, b), 1.95 * std::sqrt(2.0 / 20000));
}

TEST(Haar, TraceClassOneDimension) {
  MCEstimate e = trace_class(1, 1000, 3);
  EXPECT_NEAR(e.mean, 1, 1e-12);
}

TEST(Estimator, DeterministicPerSeedAndWorkers) {
  IndexSet j = enumerate_full(2, 3);
  for (unsigned w : {1u, 3u}) {
    MCEstimate a = torus_exp_sum(j, 30001, 77, w), b = torus_exp_sum(j, 30001, 77, w);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_EQ(a.samples, 30001u);
  }
  MCEstimate c = torus_exp_sum(j, 30001, 78);
  EXPECT_NE(c.mean, torus_exp_sum(j, 30001, 77).mean);
}

TEST(Estimator, MergeMatchesSinglePass) {
  CounterRng rng(5, 0);
  MomentAccumulator all, left, right;
  for (int i = 0; i < 1001; ++i) {
    double x = rng.normal() * 3 + 1;
    all.add(x);
    (i < 400 ? left : right).add(x);
  }
  left.merge(right);
  EXPECT_EQ(left.count, all.count);
  EXPECT_NEAR(left.mean, all.mean, 1e-12);
  EXPECT_NEAR(left.m2, all.m2, 1e-9 * all.m2);
}

TEST(Sphere, ConstantDegreeIsOne) {
  MCEstimate e = sphere_invariant(4, {0}, 500, 1);
  EXPECT_NEAR(e.mean, 1, 1e-12);
}

TEST(Sphere, AgreesWithRadialIntegral) {
  expect_within(sphere_invariant(2, {0, 1}, 200000, 2), proj_hilbert_invariant(2, {0, 1}));
  expect_within(sphere_invariant(3, {2}, 200000, 2), proj_hilbert_homog(3, 2));
}

TEST(Sphere, IndependentOfBasePoint) {
  CounterRng rng(51, 0);
  std::vector<std::complex<double>> z;
  sample_sphere_complex(3, rng, z);
  double norm = 0;
  for (auto v : z) norm += std::norm(v);
  EXPECT_NEAR(norm, 1, 1e-12);
  MCEstimate a = sphere_invariant(3, {0, 1, 2}, 100000, 6), b = sphere_invariant(3, {0, 1, 2}, 100000, 7, 1, z);
  double se = std::hypot(a.std_error, b.std_error);
  EXPECT_NEAR(a.mean, b.mean, 5 * se);
}

TEST(Dirichlet, SmallLengths) {
  expect_error([] { dirichlet_projection(1, std::nullopt, 100, 1); }, ErrorCode::InvalidArgument);
  // Delta(2) = {0, 1} in one variable.
  expect_within(dirichlet_projection(2, std::nullopt, 200000, 1), 4 / pi);
  // Delta(6) = {1, p1, p2, p1^2, p1 p2, ...}: compare against the torus estimator on the same set.
  IndexSet j = enumerate_prime_generated(6);
  MCEstimate a = dirichlet_projection(6, std::nullopt, 100000, 3), b = torus_exp_sum(j, 100000, 4);
  EXPECT_NEAR(a.mean, b.mean, 5 * std::hypot(a.std_error, b.std_error));
}

TEST(Boolean, SamplerBitsAreFair) {
  CounterRng rng(61, 0);
  std::vector<int> ones(10, 0);
  const int samples = 50000;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t b = sample_boolean(10, rng);
    ASSERT_LT(b, 1024u);
    for (int k = 0; k < 10; ++k) ones[k] += (b >> k) & 1;
  }
  for (int c : ones) EXPECT_NEAR(c / double(samples), 0.5, 5 * 0.5 / std::sqrt(double(samples)));
  expect_error([&] { sample_boolean(65, rng); }, ErrorCode::InvalidArgument);
}
