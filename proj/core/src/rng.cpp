#include "projlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace projlab {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key0_(mix64(seed + 0x9e3779b97f4a7c15ull)),
      key1_(mix64(mix64(stream ^ 0xd1b54a32d192ed03ull) + key0_)) {}

std::uint64_t CounterRng::next_u64() {
  std::uint64_t c = counter_++;
  return mix64(mix64(c * 0x9e3779b97f4a7c15ull + key0_) ^ key1_);
}

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::uniform_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = uniform_open();
  double v = uniform();
  double rad = std::sqrt(-2.0 * std::log(u));
  double ang = 2.0 * std::numbers::pi * v;
  spare_ = rad * std::sin(ang);
  has_spare_ = true;
  return rad * std::cos(ang);
}

std::complex<double> CounterRng::complex_normal() {
  // Box-Muller pair scaled to unit complex variance.
  double u = uniform_open();
  double v = uniform();
  double rad = std::sqrt(-std::log(u));
  double ang = 2.0 * std::numbers::pi * v;
  return {rad * std::cos(ang), rad * std::sin(ang)};
}

double CounterRng::exponential() { return -std::log(uniform_open()); }

}  // namespace projlab
