#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projlab/indexsets.hpp"
#include "projlab/montecarlo.hpp"
#include "projlab/polynomial.hpp"

namespace projlab {

inline constexpr unsigned kMaxExactCube = 26;

enum class FamilyKind { Homog, UpTo, Custom };

// A family of subsets of {1..N}, one bitmask per subset.
class SubsetFamily {
 public:
  static SubsetFamily homog(unsigned n, unsigned d);
  static SubsetFamily up_to(unsigned n, unsigned d);
  static SubsetFamily custom(unsigned n, std::vector<std::uint64_t> masks);

  unsigned cube_dimension() const { return n_; }
  FamilyKind kind() const { return kind_; }
  unsigned degree() const { return d_; }
  const std::vector<std::uint64_t>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  std::string describe() const;

 private:
  unsigned n_ = 0;
  unsigned d_ = 0;
  FamilyKind kind_ = FamilyKind::Custom;
  std::vector<std::uint64_t> sets_;
};

// "homog:d", "upto:d" or a JSON list of bitmasks.
SubsetFamily parse_family(const std::string& text, unsigned n);

// Exact sums over all 2^N sign vectors of |sum_S chi_S| and (sum_S chi_S)^2.
struct BooleanSums {
  unsigned cube_dimension = 0;
  BigInt abs_sum = 0;
  BigInt square_sum = 0;

  double mean_abs() const;
  double mean_square() const;
};

BooleanSums boolean_exact_sums(const SubsetFamily& family, unsigned workers = 1);
double boolean_proj_exact(const SubsetFamily& family, unsigned workers = 1);
MCEstimate boolean_proj_mc(const SubsetFamily& family, std::uint64_t samples, std::uint64_t seed = kDefaultSeed,
                           unsigned workers = 1);

RationalPoly pd_polynomial_exact(unsigned d);
UniPoly pd_polynomial(unsigned d);

BigInt cdkn_exact(unsigned d, unsigned k, unsigned n);

// E|P_d(Z)|.
double boolean_limit(unsigned d);

}  // namespace projlab
