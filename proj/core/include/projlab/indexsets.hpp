#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace projlab {

using BigInt = boost::multiprecision::cpp_int;

// A multi-index alpha in N_0^n. Length is the ambient dimension and is at least 1.
class MultiIndex {
 public:
  MultiIndex() : entries_(1, 0u) {}
  explicit MultiIndex(std::vector<unsigned> entries);

  static MultiIndex zero(std::size_t n);
  static MultiIndex unit(std::size_t n, std::size_t k);

  std::size_t dimension() const { return entries_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<unsigned>& entries() const { return entries_; }

  bool is_tetrahedral() const;
  bool is_even() const;
  // Entries sorted in decreasing order (alpha*).
  std::vector<unsigned> decreasing() const;
  std::vector<std::size_t> support() const;

  MultiIndex operator+(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<unsigned> entries_;
  unsigned degree_ = 0;
};

// Colex order: compare from the last coordinate down.
struct ColexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

std::string to_string(const MultiIndex& alpha);

// |alpha|! / prod alpha_i!
BigInt multiplicity(const MultiIndex& alpha);
BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned k);

enum class IndexKind { Full, FullUpTo, Tetrahedral, TetrahedralUpTo, PrimeGenerated, PrimeHomog, Custom };

struct IndexKindInfo {
  IndexKind kind = IndexKind::Custom;
  unsigned m = 0;
  std::uint64_t x = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class IndexSet {
 public:
  IndexSet() = default;
  // Deduplicates and sorts members in colex order.
  IndexSet(std::size_t dimension, std::vector<MultiIndex> members, IndexKindInfo kind = {});

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const IndexKindInfo& kind() const { return kind_; }
  const std::vector<MultiIndex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const MultiIndex& alpha) const;
  unsigned max_degree() const;
  bool is_homogeneous() const;
  // Members of degree exactly m (J_m).
  IndexSet homogeneous_part(unsigned m) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<MultiIndex> members_;
  IndexKindInfo kind_;
};

std::string to_string(const IndexKindInfo& kind);

// Closed-form cardinalities used for the enumeration cap.
BigInt full_count(unsigned m, std::size_t n);
BigInt tetrahedral_count(unsigned m, std::size_t n);

IndexSet enumerate_full(unsigned m, std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);
IndexSet enumerate_full_up_to(unsigned m, std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);
IndexSet enumerate_tetrahedral(unsigned m, std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);
IndexSet enumerate_tetrahedral_up_to(unsigned m, std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);
// Delta(x): alpha with p^alpha <= x, in dimension pi(x).
IndexSet enumerate_prime_generated(std::uint64_t x, std::uint64_t cap = kDefaultEnumerationCap);
// Delta(x, m): the degree-m part of Delta(x).
IndexSet enumerate_prime_homog(std::uint64_t x, unsigned m, std::uint64_t cap = kDefaultEnumerationCap);

// Generic entry point; n is ignored for the prime families.
IndexSet enumerate(IndexKind kind, unsigned m, std::size_t n, std::uint64_t x = 0,
                   std::uint64_t cap = kDefaultEnumerationCap);

IndexSet reduced_set(const IndexSet& j);

std::pair<MultiIndex, MultiIndex> tetra_even_decompose(const MultiIndex& alpha);

// Prime exponents of n; the length is max(1, pi(largest prime factor)).
MultiIndex prime_map(std::uint64_t n);
// Same, padded to a fixed dimension (throws if a prime index does not fit).
MultiIndex prime_map(std::uint64_t n, std::size_t dimension);
std::uint64_t prime_unmap(const MultiIndex& alpha);

// Parses "full:m", "upto:m", "tetra:m", "tetra-upto:m", "primes:x", "primes:x,m" or a JSON member list.
IndexSet parse_index_set(const std::string& text, std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);

nlohmann::json to_json(const IndexSet& j);
IndexSet index_set_from_json(const nlohmann::json& j);

}  // namespace projlab
