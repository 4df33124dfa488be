#include "projlab/boolean.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "projlab/closedforms.hpp"
#include "projlab/error.hpp"

namespace projlab {
namespace {

void check_cube(unsigned n) {
  if (n < 1 || n > 64) throw Error(ErrorCode::InvalidArgument, "cube dimension must lie in [1, 64]");
}

std::vector<std::uint64_t> masks_of_popcount(unsigned n, unsigned d) {
  std::vector<std::uint64_t> out;
  if (d > n) return out;
  if (d == 0) return {0};
  // Gosper's hack over n-bit words.
  std::uint64_t m = (d == 64) ? ~0ull : ((std::uint64_t{1} << d) - 1);
  const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  while (true) {
    out.push_back(m);
    std::uint64_t c = m & (~m + 1);
    std::uint64_t r = m + c;
    if (r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
    if (limit != 0 && m >= limit) break;
  }
  return out;
}

}  // namespace

SubsetFamily SubsetFamily::homog(unsigned n, unsigned d) {
  check_cube(n);
  if (d > n) throw Error(ErrorCode::InvalidArgument, "degree exceeds cube dimension");
  SubsetFamily f;
  f.n_ = n;
  f.d_ = d;
  f.kind_ = FamilyKind::Homog;
  f.sets_ = masks_of_popcount(n, d);
  return f;
}

SubsetFamily SubsetFamily::up_to(unsigned n, unsigned d) {
  check_cube(n);
  SubsetFamily f;
  f.n_ = n;
  f.d_ = std::min(d, n);
  f.kind_ = FamilyKind::UpTo;
  for (unsigned k = 0; k <= f.d_; ++k) {
    auto part = masks_of_popcount(n, k);
    f.sets_.insert(f.sets_.end(), part.begin(), part.end());
  }
  return f;
}

SubsetFamily SubsetFamily::custom(unsigned n, std::vector<std::uint64_t> masks) {
  check_cube(n);
  if (masks.empty()) throw Error(ErrorCode::InvalidArgument, "subset family must be nonempty");
  SubsetFamily f;
  f.n_ = n;
  f.kind_ = FamilyKind::Custom;
  for (auto m : masks) {
    if (n < 64 && (m >> n) != 0) throw Error(ErrorCode::InvalidArgument, "bitmask does not fit in N bits");
    f.d_ = std::max<unsigned>(f.d_, static_cast<unsigned>(std::popcount(m)));
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  f.sets_ = std::move(masks);
  return f;
}

std::string SubsetFamily::describe() const {
  switch (kind_) {
    case FamilyKind::Homog: return "homog:" + std::to_string(d_);
    case FamilyKind::UpTo: return "upto:" + std::to_string(d_);
    case FamilyKind::Custom: break;
  }
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < sets_.size(); ++i) os << (i ? "," : "") << sets_[i];
  os << ']';
  return os.str();
}

SubsetFamily parse_family(const std::string& text, unsigned n) {
  if (!text.empty() && text.front() == '[') {
    try {
      return SubsetFamily::custom(n, nlohmann::json::parse(text).get<std::vector<std::uint64_t>>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
  }
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    unsigned d = 0;
    try {
      d = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "family degree in '" + text + "'");
    }
    if (head == "homog") return SubsetFamily::homog(n, d);
    if (head == "upto") return SubsetFamily::up_to(n, d);
  }
  throw Error(ErrorCode::Parse, "subset family '" + text + "'");
}

double BooleanSums::mean_abs() const {
  return std::ldexp(abs_sum.convert_to<double>(), -static_cast<int>(cube_dimension));
}

double BooleanSums::mean_square() const {
  return std::ldexp(square_sum.convert_to<double>(), -static_cast<int>(cube_dimension));
}

BooleanSums boolean_exact_sums(const SubsetFamily& family, unsigned workers) {
  const unsigned n = family.cube_dimension();
  if (n > kMaxExactCube)
    throw Error(ErrorCode::UseMonteCarlo, "exact enumeration supports N <= " + std::to_string(kMaxExactCube));
  const auto& sets = family.sets();
  std::vector<std::vector<std::uint32_t>> members_of(n);
  for (std::uint32_t s = 0; s < sets.size(); ++s)
    for (unsigned i = 0; i < n; ++i)
      if ((sets[s] >> i) & 1) members_of[i].push_back(s);

  workers = std::max(1u, workers);
  unsigned top_bits = 0;
  while ((1u << top_bits) < workers && top_bits < n) ++top_bits;
  const unsigned low_bits = n - top_bits;
  const std::size_t chunks = std::size_t{1} << top_bits;
  std::vector<std::uint64_t> abs_parts(chunks);
  std::vector<unsigned __int128> sq_parts(chunks);

  parallel_blocks(chunks, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    std::vector<std::int8_t> chi(sets.size());
    for (std::size_t c = begin; c < end; ++c) {
      std::uint64_t x = static_cast<std::uint64_t>(c) << low_bits;
      std::int64_t sum = 0;
      for (std::size_t s = 0; s < sets.size(); ++s) {
        chi[s] = (std::popcount(sets[s] & x) % 2) ? -1 : 1;
        sum += chi[s];
      }
      std::uint64_t abs_acc = static_cast<std::uint64_t>(std::abs(sum));
      unsigned __int128 sq_acc = static_cast<unsigned __int128>(sum * sum);
      const std::uint64_t steps = std::uint64_t{1} << low_bits;
      for (std::uint64_t k = 1; k < steps; ++k) {
        // Gray code: step k flips bit ctz(k).
        unsigned bit = static_cast<unsigned>(std::countr_zero(k));
        for (std::uint32_t s : members_of[bit]) {
          sum -= 2 * chi[s];
          chi[s] = static_cast<std::int8_t>(-chi[s]);
        }
        abs_acc += static_cast<std::uint64_t>(sum < 0 ? -sum : sum);
        sq_acc += static_cast<unsigned __int128>(sum * sum);
      }
      abs_parts[c] = abs_acc;
      sq_parts[c] = sq_acc;
    }
  });
  BooleanSums out;
  out.cube_dimension = n;
  for (std::size_t c = 0; c < chunks; ++c) {
    out.abs_sum += abs_parts[c];
    BigInt hi = static_cast<std::uint64_t>(sq_parts[c] >> 64);
    BigInt lo = static_cast<std::uint64_t>(sq_parts[c]);
    out.square_sum += (hi << 64) + lo;
  }
  return out;
}

double boolean_proj_exact(const SubsetFamily& family, unsigned workers) {
  return boolean_exact_sums(family, workers).mean_abs();
}

MCEstimate boolean_proj_mc(const SubsetFamily& family, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  const auto& sets = family.sets();
  const unsigned n = family.cube_dimension();
  return run_estimator(samples, seed, workers, [&](CounterRng& rng) {
    std::uint64_t x = sample_boolean(n, rng);
    std::int64_t sum = 0;
    for (auto s : sets) sum += (std::popcount(s & x) % 2) ? -1 : 1;
    return static_cast<double>(sum < 0 ? -sum : sum);
  });
}

RationalPoly pd_polynomial_exact(unsigned d) {
  if (d > 20) throw Error(ErrorCode::InvalidArgument, "P_d supported for d <= 20");
  std::vector<RationalPoly> p(d + 1);
  for (unsigned j = 0; j <= d; ++j) {
    if (j == 0) {
      p[0] = {Rational(1)};
      continue;
    }
    if (j == 1) {
      p[1] = {Rational(0), Rational(1)};
      continue;
    }
    RationalPoly cur(j + 1, Rational(0));
    cur[j] = Rational(1) / Rational(factorial(j));
    for (unsigned k = 1; 2 * k <= j; ++k) {
      Rational f = Rational(1) / Rational(factorial(k) * (BigInt(1) << k));
      const auto& prev = p[j - 2 * k];
      for (std::size_t i = 0; i < prev.size(); ++i) cur[i] -= f * prev[i];
    }
    p[j] = std::move(cur);
  }
  return p[d];
}

UniPoly pd_polynomial(unsigned d) {
  UniPoly out;
  for (const auto& c : pd_polynomial_exact(d)) out.coeffs.push_back(c.convert_to<double>());
  return out;
}

BigInt cdkn_exact(unsigned d, unsigned k, unsigned n) {
  if (k < 1 || 2 * k > d) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= d/2");
  if (n < d) throw Error(ErrorCode::InvalidArgument, "need N >= d");
  if (n > 14) throw Error(ErrorCode::BudgetExceeded, "cdkn_exact supports N <= 14");
  const unsigned t = d - 2 * k;
  IndexSet betas = enumerate_full(k, n);
  auto sum_for = [&](const MultiIndex& alpha_t) {
    BigInt total = 0;
    for (const auto& beta : betas) {
      std::vector<unsigned> e(n);
      for (unsigned i = 0; i < n; ++i) e[i] = alpha_t[i] + 2 * beta[i];
      total += multiplicity(MultiIndex(std::move(e)));
    }
    return total;
  };
  std::vector<unsigned> first(n, 0u), last(n, 0u);
  for (unsigned i = 0; i < t; ++i) {
    first[i] = 1;
    last[n - 1 - i] = 1;
  }
  BigInt a = sum_for(MultiIndex(first));
  if (first != last) {
    BigInt b = sum_for(MultiIndex(last));
    if (a != b) throw Error(ErrorCode::InvalidArgument, "C_{d,k,N} depends on the tetrahedral index");
  }
  return a;
}

double boolean_limit(unsigned d) {
  if (d < 1 || d > 20) throw Error(ErrorCode::InvalidArgument, "boolean_limit supports 1 <= d <= 20");
  return gaussian_abs_moment(pd_polynomial(d));
}

}  // namespace projlab
