#include "projlab/montecarlo.hpp"

#include <numbers>

#include "projlab/closedforms.hpp"
#include "projlab/error.hpp"

namespace projlab {

nlohmann::json to_json(const MCEstimate& e, const std::string& quantity, const nlohmann::json& params) {
  return {{"quantity", quantity}, {"params", params},   {"mean", e.mean},      {"stderr", e.std_error},
          {"samples", e.samples}, {"seed", e.seed},     {"workers", e.workers}};
}

void sample_torus(std::size_t n, CounterRng& rng, std::vector<std::complex<double>>& out) {
  out.resize(n);
  for (auto& z : out) z = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
}

void sample_sphere_complex(std::size_t n, CounterRng& rng, std::vector<std::complex<double>>& out) {
  out.resize(n);
  double norm2 = 0;
  for (auto& z : out) {
    z = rng.complex_normal();
    norm2 += std::norm(z);
  }
  double inv = 1 / std::sqrt(norm2);
  for (auto& z : out) z *= inv;
}

Eigen::MatrixXcd sample_haar_unitary(std::size_t n, CounterRng& rng, bool phase_correct) {
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  if (phase_correct) {
    const auto& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < dim; ++j) {
      std::complex<double> d = r(j, j);
      double a = std::abs(d);
      if (a > 0) q.col(j) *= d / a;
    }
  }
  return q;
}

std::uint64_t sample_boolean(std::size_t n, CounterRng& rng) {
  if (n > 64) throw Error(ErrorCode::InvalidArgument, "boolean sampler supports N <= 64");
  std::uint64_t bits = rng.next_u64();
  return n == 64 ? bits : bits & ((std::uint64_t{1} << n) - 1);
}

namespace {

struct SparseIndex {
  std::vector<std::pair<std::size_t, unsigned>> terms;
};

}  // namespace

MCEstimate torus_exp_sum(const IndexSet& j, std::uint64_t samples, std::uint64_t seed, unsigned workers, int power) {
  if (j.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be nonempty");
  const std::size_t n = j.dimension();
  std::vector<SparseIndex> sparse;
  unsigned top = 0;
  for (const auto& a : j) {
    SparseIndex s;
    for (std::size_t i : a.support()) s.terms.emplace_back(i, a[i]);
    top = std::max(top, a.degree());
    sparse.push_back(std::move(s));
  }
  return run_estimator(samples, seed, workers, [&](CounterRng& rng) {
    // Powers z_i^k via phase sums so |z^alpha| stays at 1 up to rounding.
    thread_local std::vector<double> theta;
    theta.resize(n);
    for (auto& t : theta) t = 2 * std::numbers::pi * rng.uniform();
    std::complex<double> sum = 0;
    for (const auto& s : sparse) {
      double phase = 0;
      for (auto [i, e] : s.terms) phase += e * theta[i];
      sum += std::polar(1.0, phase);
    }
    double v = std::abs(sum);
    return power == 1 ? v : std::pow(v, power);
  });
}

MCEstimate haar_trace_moment(std::size_t n, int power, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  if (n < 1 || n > 64) throw Error(ErrorCode::InvalidArgument, "Haar sampler supports 1 <= n <= 64");
  return run_estimator(samples, seed, workers, [&](CounterRng& rng) {
    double v = std::abs(sample_haar_unitary(n, rng).trace());
    return power == 1 ? v : std::pow(v, power);
  });
}

MCEstimate trace_class(std::size_t n, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  MCEstimate e = haar_trace_moment(n, 1, samples, seed, workers);
  e.mean *= static_cast<double>(n);
  e.std_error *= static_cast<double>(n);
  return e;
}

MCEstimate sphere_invariant(std::size_t n, const std::vector<unsigned>& degrees, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers,
                            const std::optional<std::vector<std::complex<double>>>& z) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sphere integral needs n >= 2");
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "degree set must be nonempty");
  std::vector<std::complex<double>> point(n, 0.0);
  point[0] = 1.0;
  if (z) {
    if (z->size() != n) throw Error(ErrorCode::DimensionMismatch, "sphere point length");
    point = *z;
  }
  std::vector<double> c;
  for (unsigned k : degrees) c.push_back(hilbert_coefficient(static_cast<unsigned>(n), k));
  return run_estimator(samples, seed, workers, [&](CounterRng& rng) {
    thread_local std::vector<std::complex<double>> xi;
    sample_sphere_complex(n, rng, xi);
    std::complex<double> w = 0;
    for (std::size_t i = 0; i < n; ++i) w += point[i] * std::conj(xi[i]);
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < degrees.size(); ++k) s += c[k] * std::pow(w, static_cast<int>(degrees[k]));
    return std::abs(s);
  });
}

MCEstimate dirichlet_projection(std::uint64_t x, std::optional<unsigned> m, std::uint64_t samples, std::uint64_t seed,
                                unsigned workers) {
  if (x < 2) throw Error(ErrorCode::InvalidArgument, "Dirichlet projection needs x >= 2");
  IndexSet j = m ? enumerate_prime_homog(x, *m) : enumerate_prime_generated(x);
  if (j.empty()) throw Error(ErrorCode::InvalidArgument, "empty Dirichlet index set");
  return torus_exp_sum(j, samples, seed, workers);
}

}  // namespace projlab
