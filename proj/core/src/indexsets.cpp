#include "projlab/indexsets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "projlab/error.hpp"
#include "projlab/primes.hpp"

namespace projlab {

MultiIndex::MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidArgument, "multi-index needs at least one entry");
  degree_ = std::accumulate(entries_.begin(), entries_.end(), 0u);
}

MultiIndex MultiIndex::zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0u)); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t k) {
  std::vector<unsigned> e(n, 0u);
  if (k >= n) throw Error(ErrorCode::InvalidArgument, "unit index out of range");
  e[k] = 1;
  return MultiIndex(std::move(e));
}

bool MultiIndex::is_tetrahedral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](unsigned a) { return a <= 1; });
}

bool MultiIndex::is_even() const {
  return std::all_of(entries_.begin(), entries_.end(), [](unsigned a) { return a % 2 == 0; });
}

std::vector<unsigned> MultiIndex::decreasing() const {
  std::vector<unsigned> d = entries_;
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<std::size_t> MultiIndex::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != 0) s.push_back(i);
  return s;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.dimension() != dimension()) throw Error(ErrorCode::DimensionMismatch, "multi-index sum");
  std::vector<unsigned> e(entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
  return MultiIndex(std::move(e));
}

bool ColexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  for (std::size_t i = a.dimension(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string to_string(const MultiIndex& alpha) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < alpha.dimension(); ++i) os << (i ? "," : "") << alpha[i];
  os << ')';
  return os.str();
}

BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

BigInt multiplicity(const MultiIndex& alpha) {
  BigInt r = factorial(alpha.degree());
  for (unsigned a : alpha.entries()) r /= factorial(a);
  return r;
}

IndexSet::IndexSet(std::size_t dimension, std::vector<MultiIndex> members, IndexKindInfo kind)
    : dimension_(dimension), members_(std::move(members)), kind_(kind) {
  if (dimension_ == 0) throw Error(ErrorCode::InvalidArgument, "index set dimension must be >= 1");
  for (const auto& a : members_)
    if (a.dimension() != dimension_) throw Error(ErrorCode::DimensionMismatch, "index set member " + to_string(a));
  std::sort(members_.begin(), members_.end(), ColexLess{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool IndexSet::contains(const MultiIndex& alpha) const {
  return std::binary_search(members_.begin(), members_.end(), alpha, ColexLess{});
}

unsigned IndexSet::max_degree() const {
  unsigned d = 0;
  for (const auto& a : members_) d = std::max(d, a.degree());
  return d;
}

bool IndexSet::is_homogeneous() const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const MultiIndex& a) { return a.degree() == members_.front().degree(); });
}

IndexSet IndexSet::homogeneous_part(unsigned m) const {
  std::vector<MultiIndex> part;
  for (const auto& a : members_)
    if (a.degree() == m) part.push_back(a);
  return IndexSet(dimension_, std::move(part), IndexKindInfo{IndexKind::Custom, m, 0});
}

std::string to_string(const IndexKindInfo& kind) {
  switch (kind.kind) {
    case IndexKind::Full: return "full:" + std::to_string(kind.m);
    case IndexKind::FullUpTo: return "upto:" + std::to_string(kind.m);
    case IndexKind::Tetrahedral: return "tetra:" + std::to_string(kind.m);
    case IndexKind::TetrahedralUpTo: return "tetra-upto:" + std::to_string(kind.m);
    case IndexKind::PrimeGenerated: return "primes:" + std::to_string(kind.x);
    case IndexKind::PrimeHomog: return "primes:" + std::to_string(kind.x) + "," + std::to_string(kind.m);
    case IndexKind::Custom: return "custom";
  }
  return "custom";
}

BigInt full_count(unsigned m, std::size_t n) {
  return binomial(static_cast<unsigned>(n) + m - 1, m);
}

BigInt tetrahedral_count(unsigned m, std::size_t n) { return binomial(static_cast<unsigned>(n), m); }

namespace {

void check_cap(const BigInt& count, std::uint64_t cap) {
  if (count > cap) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "cardinality " + count.str() + " exceeds cap " + std::to_string(cap));
  }
}

void check_dims(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
}

// Appends every alpha of degree m with entries <= bound.
void append_degree(unsigned m, std::size_t n, unsigned bound, std::vector<MultiIndex>& out) {
  std::vector<unsigned> e(n, 0u);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == n) {
      if (left <= bound) {
        e[pos] = left;
        out.emplace_back(e);
      }
      return;
    }
    for (unsigned v = std::min(left, bound) + 1; v-- > 0;) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
    e[pos] = 0;
  };
  rec(rec, 0, m);
}

}  // namespace

IndexSet enumerate_full(unsigned m, std::size_t n, std::uint64_t cap) {
  check_dims(n);
  check_cap(full_count(m, n), cap);
  std::vector<MultiIndex> out;
  append_degree(m, n, m, out);
  return IndexSet(n, std::move(out), {IndexKind::Full, m, 0});
}

IndexSet enumerate_full_up_to(unsigned m, std::size_t n, std::uint64_t cap) {
  check_dims(n);
  // sum_{k<=m} binom(n+k-1,k) = binom(n+m,m)
  check_cap(binomial(static_cast<unsigned>(n) + m, m), cap);
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= m; ++k) append_degree(k, n, k, out);
  return IndexSet(n, std::move(out), {IndexKind::FullUpTo, m, 0});
}

IndexSet enumerate_tetrahedral(unsigned m, std::size_t n, std::uint64_t cap) {
  check_dims(n);
  check_cap(tetrahedral_count(m, n), cap);
  std::vector<MultiIndex> out;
  if (m <= n) append_degree(m, n, 1, out);
  return IndexSet(n, std::move(out), {IndexKind::Tetrahedral, m, 0});
}

IndexSet enumerate_tetrahedral_up_to(unsigned m, std::size_t n, std::uint64_t cap) {
  check_dims(n);
  BigInt total = 0;
  for (unsigned k = 0; k <= m; ++k) total += tetrahedral_count(k, n);
  check_cap(total, cap);
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= m && k <= n; ++k) append_degree(k, n, 1, out);
  return IndexSet(n, std::move(out), {IndexKind::TetrahedralUpTo, m, 0});
}

namespace {

std::vector<MultiIndex> prime_indices(std::uint64_t x, std::uint64_t cap, int degree) {
  if (x < 1) throw Error(ErrorCode::InvalidArgument, "x must be >= 1");
  if (x > cap) throw Error(ErrorCode::EnumerationTooLarge, "x exceeds cap " + std::to_string(cap));
  std::size_t dim = std::max<std::size_t>(1, prime_count(x));
  std::vector<MultiIndex> out;
  for (std::uint64_t k = 1; k <= x; ++k) {
    MultiIndex a = prime_map(k, dim);
    if (degree < 0 || a.degree() == static_cast<unsigned>(degree)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

IndexSet enumerate_prime_generated(std::uint64_t x, std::uint64_t cap) {
  auto members = prime_indices(x, cap, -1);
  std::size_t dim = members.front().dimension();
  return IndexSet(dim, std::move(members), {IndexKind::PrimeGenerated, 0, x});
}

IndexSet enumerate_prime_homog(std::uint64_t x, unsigned m, std::uint64_t cap) {
  std::size_t dim = std::max<std::size_t>(1, prime_count(x));
  auto members = prime_indices(x, cap, static_cast<int>(m));
  return IndexSet(dim, std::move(members), {IndexKind::PrimeHomog, m, x});
}

IndexSet enumerate(IndexKind kind, unsigned m, std::size_t n, std::uint64_t x, std::uint64_t cap) {
  switch (kind) {
    case IndexKind::Full: return enumerate_full(m, n, cap);
    case IndexKind::FullUpTo: return enumerate_full_up_to(m, n, cap);
    case IndexKind::Tetrahedral: return enumerate_tetrahedral(m, n, cap);
    case IndexKind::TetrahedralUpTo: return enumerate_tetrahedral_up_to(m, n, cap);
    case IndexKind::PrimeGenerated: return enumerate_prime_generated(x, cap);
    case IndexKind::PrimeHomog: return enumerate_prime_homog(x, m, cap);
    case IndexKind::Custom: break;
  }
  throw Error(ErrorCode::InvalidArgument, "custom index sets cannot be enumerated");
}

IndexSet reduced_set(const IndexSet& j) {
  if (j.empty()) throw Error(ErrorCode::InvalidArgument, "empty index set");
  if (!j.is_homogeneous()) throw Error(ErrorCode::MixedDegrees, "reduced set needs a homogeneous index set");
  unsigned m = j.members().front().degree();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "reduced set needs degree >= 1");
  std::vector<MultiIndex> out;
  for (const auto& beta : j) {
    for (std::size_t k = 0; k < beta.dimension(); ++k) {
      if (beta[k] == 0) continue;
      std::vector<unsigned> e = beta.entries();
      --e[k];
      out.emplace_back(std::move(e));
    }
  }
  return IndexSet(j.dimension(), std::move(out), {IndexKind::Custom, m - 1, 0});
}

std::pair<MultiIndex, MultiIndex> tetra_even_decompose(const MultiIndex& alpha) {
  std::vector<unsigned> t(alpha.dimension()), e(alpha.dimension());
  for (std::size_t i = 0; i < alpha.dimension(); ++i) {
    t[i] = alpha[i] % 2;
    e[i] = alpha[i] - t[i];
  }
  return {MultiIndex(std::move(t)), MultiIndex(std::move(e))};
}

MultiIndex prime_map(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "prime_map needs n >= 1");
  std::vector<unsigned> e;
  std::uint64_t rest = n;
  for (std::size_t k = 1; rest > 1; ++k) {
    std::uint64_t p = nth_prime(k);
    if (p * p > rest) {
      // rest is prime
      std::size_t idx = prime_count(rest);
      e.resize(idx, 0u);
      e[idx - 1] += 1;
      break;
    }
    unsigned c = 0;
    while (rest % p == 0) {
      rest /= p;
      ++c;
    }
    if (c) {
      e.resize(std::max(e.size(), k), 0u);
      e[k - 1] += c;
    }
  }
  if (e.empty()) e.push_back(0);
  return MultiIndex(std::move(e));
}

MultiIndex prime_map(std::uint64_t n, std::size_t dimension) {
  MultiIndex a = prime_map(n);
  std::vector<unsigned> e = a.entries();
  if (e.size() > dimension) {
    for (std::size_t i = dimension; i < e.size(); ++i)
      if (e[i] != 0) throw Error(ErrorCode::DimensionMismatch, "prime index exceeds dimension");
    e.resize(dimension);
  }
  e.resize(dimension, 0u);
  return MultiIndex(std::move(e));
}

std::uint64_t prime_unmap(const MultiIndex& alpha) {
  unsigned __int128 n = 1;
  for (std::size_t i = 0; i < alpha.dimension(); ++i) {
    if (alpha[i] == 0) continue;
    std::uint64_t p = nth_prime(i + 1);
    for (unsigned c = 0; c < alpha[i]; ++c) {
      n *= p;
      if (n > UINT64_MAX) throw Error(ErrorCode::InvalidArgument, "prime_unmap overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(n);
}

namespace {

std::vector<std::uint64_t> parse_numbers(const std::string& s) {
  std::vector<std::uint64_t> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long long val = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(val);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad integer '" + item + "'");
    }
  }
  return v;
}

}  // namespace

IndexSet parse_index_set(const std::string& text, std::size_t n, std::uint64_t cap) {
  if (!text.empty() && text.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    std::vector<MultiIndex> members;
    for (const auto& row : j) members.emplace_back(row.get<std::vector<unsigned>>());
    if (members.empty()) throw Error(ErrorCode::Parse, "empty index list");
    std::size_t dim = members.front().dimension();
    return IndexSet(dim, std::move(members));
  }
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::Parse, "index set '" + text + "'");
  std::string head = text.substr(0, colon);
  auto nums = parse_numbers(text.substr(colon + 1));
  if (nums.empty()) throw Error(ErrorCode::Parse, "index set '" + text + "'");
  auto m = static_cast<unsigned>(nums[0]);
  if (head == "full" && nums.size() == 1) return enumerate_full(m, n, cap);
  if (head == "upto" && nums.size() == 1) return enumerate_full_up_to(m, n, cap);
  if (head == "tetra" && nums.size() == 1) return enumerate_tetrahedral(m, n, cap);
  if (head == "tetra-upto" && nums.size() == 1) return enumerate_tetrahedral_up_to(m, n, cap);
  if (head == "primes" && nums.size() == 1) return enumerate_prime_generated(nums[0], cap);
  if (head == "primes" && nums.size() == 2) return enumerate_prime_homog(nums[0], static_cast<unsigned>(nums[1]), cap);
  throw Error(ErrorCode::Parse, "index set '" + text + "'");
}

nlohmann::json to_json(const IndexSet& j) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& a : j) members.push_back(a.entries());
  return {{"dimension", j.dimension()}, {"kind", to_string(j.kind())}, {"members", members}};
}

IndexSet index_set_from_json(const nlohmann::json& j) {
  try {
    auto dim = j.at("dimension").get<std::size_t>();
    std::vector<MultiIndex> members;
    for (const auto& row : j.at("members")) members.emplace_back(row.get<std::vector<unsigned>>());
    IndexKindInfo kind;
    std::string k = j.value("kind", "custom");
    if (k != "custom") {
      IndexSet parsed = parse_index_set(k, dim);
      kind = parsed.kind();
    }
    return IndexSet(dim, std::move(members), kind);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace projlab
