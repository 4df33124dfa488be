#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "projlab/indexsets.hpp"
#include "projlab/parallel.hpp"
#include "projlab/rng.hpp"

namespace projlab {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct MCEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

nlohmann::json to_json(const MCEstimate& e, const std::string& quantity, const nlohmann::json& params);

// Running mean/variance (Welford), merged with Chan's formula.
struct MomentAccumulator {
  std::uint64_t count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const MomentAccumulator& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    double n = static_cast<double>(count), m = static_cast<double>(o.count);
    double d = o.mean - mean;
    mean += d * m / (n + m);
    m2 += o.m2 + d * d * n * m / (n + m);
    count += o.count;
  }
};

// Worker w draws a contiguous block of samples from substream (seed, w); partial
// accumulators are merged in ascending worker order.
template <class Sampler>
MCEstimate run_estimator(std::uint64_t samples, std::uint64_t seed, unsigned workers, Sampler&& sample) {
  workers = std::max(1u, workers);
  if (samples == 0) samples = 1;
  std::vector<MomentAccumulator> parts(workers);
  parallel_blocks(samples, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    CounterRng rng(seed, w);
    MomentAccumulator acc;
    for (std::size_t i = begin; i < end; ++i) acc.add(sample(rng));
    parts[w] = acc;
  });
  MomentAccumulator total;
  for (const auto& p : parts) total.merge(p);
  MCEstimate e;
  e.mean = total.mean;
  e.std_error = total.count > 1 ? std::sqrt(total.m2 / static_cast<double>(total.count - 1) /
                                            static_cast<double>(total.count))
                                : 0.0;
  e.samples = total.count;
  e.seed = seed;
  e.workers = workers;
  return e;
}

// Samplers.
void sample_torus(std::size_t n, CounterRng& rng, std::vector<std::complex<double>>& out);
void sample_sphere_complex(std::size_t n, CounterRng& rng, std::vector<std::complex<double>>& out);
// Ginibre matrix -> Householder QR -> columns of Q multiplied by the phase of R_jj.
Eigen::MatrixXcd sample_haar_unitary(std::size_t n, CounterRng& rng, bool phase_correct = true);
// Bit k set means x_k = -1.
std::uint64_t sample_boolean(std::size_t n, CounterRng& rng);

// Mean of |sum_{alpha in J} z^alpha|^power over the torus.
MCEstimate torus_exp_sum(const IndexSet& j, std::uint64_t samples, std::uint64_t seed = kDefaultSeed,
                         unsigned workers = 1, int power = 1);
// Mean of |tr U|^power over Haar unitaries.
MCEstimate haar_trace_moment(std::size_t n, int power, std::uint64_t samples, std::uint64_t seed = kDefaultSeed,
                             unsigned workers = 1);
// n * E|tr U|.
MCEstimate trace_class(std::size_t n, std::uint64_t samples, std::uint64_t seed = kDefaultSeed, unsigned workers = 1);
// Mean of |sum_k c_k(n) <z, xi>^k| over xi on the complex sphere; z defaults to e_1.
MCEstimate sphere_invariant(std::size_t n, const std::vector<unsigned>& degrees, std::uint64_t samples,
                            std::uint64_t seed = kDefaultSeed, unsigned workers = 1,
                            const std::optional<std::vector<std::complex<double>>>& z = std::nullopt);
// Torus integral over Delta(x) (or Delta(x, m)).
MCEstimate dirichlet_projection(std::uint64_t x, std::optional<unsigned> m, std::uint64_t samples,
                                std::uint64_t seed = kDefaultSeed, unsigned workers = 1);

}  // namespace projlab
