#pragma once

#include <complex>
#include <cstdint>
#include <limits>

namespace projlab {

// Counter-based generator: output i of substream (seed, stream) is a keyed hash of i,
// so workers never share state and results do not depend on scheduling.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next_u64(); }

  std::uint64_t next_u64();
  // Uniform on [0, 1).
  double uniform();
  // Uniform on (0, 1].
  double uniform_open();
  double normal();
  // Standard complex Gaussian, E|g|^2 = 1.
  std::complex<double> complex_normal();
  // Exp(1) variate.
  double exponential();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key0_;
  std::uint64_t key1_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0;
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace projlab
