#include "projlab/primes.hpp"

#include <algorithm>
#include <mutex>

#include "projlab/error.hpp"

namespace projlab {
namespace {

class PrimeTable {
 public:
  void ensure_limit(std::uint64_t limit) {
    if (limit <= limit_) return;
    std::uint64_t target = std::max<std::uint64_t>(limit, 2 * limit_);
    sieve(target);
  }

  void ensure_count(std::size_t k) {
    while (primes_.size() < k) sieve(std::max<std::uint64_t>(64, 2 * limit_));
  }

  const std::vector<std::uint64_t>& primes() const { return primes_; }

 private:
  void sieve(std::uint64_t target) {
    std::vector<bool> composite(target + 1, false);
    primes_.clear();
    for (std::uint64_t i = 2; i <= target; ++i) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (std::uint64_t j = i * i; j <= target; j += i) composite[j] = true;
    }
    limit_ = target;
  }

  std::uint64_t limit_ = 1;
  std::vector<std::uint64_t> primes_;
};

std::mutex g_mutex;
PrimeTable g_table;

constexpr std::uint64_t kSieveLimit = 1ull << 32;

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
  if (x > kSieveLimit) throw Error(ErrorCode::BudgetExceeded, "prime sieve limit");
  std::lock_guard lock(g_mutex);
  g_table.ensure_limit(x);
  const auto& p = g_table.primes();
  auto last = std::upper_bound(p.begin(), p.end(), x);
  return {p.begin(), last};
}

std::size_t prime_count(std::uint64_t x) {
  if (x > kSieveLimit) throw Error(ErrorCode::BudgetExceeded, "prime sieve limit");
  std::lock_guard lock(g_mutex);
  g_table.ensure_limit(x);
  const auto& p = g_table.primes();
  return static_cast<std::size_t>(std::upper_bound(p.begin(), p.end(), x) - p.begin());
}

std::uint64_t nth_prime(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "nth_prime is 1-based");
  std::lock_guard lock(g_mutex);
  g_table.ensure_count(k);
  return g_table.primes()[k - 1];
}

}  // namespace projlab
