#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace projlab {

// Primes <= x from a process-wide sieve that grows on demand.
std::vector<std::uint64_t> primes_up_to(std::uint64_t x);
std::size_t prime_count(std::uint64_t x);
// k-th prime, 1-based: nth_prime(1) == 2.
std::uint64_t nth_prime(std::size_t k);

}  // namespace projlab
