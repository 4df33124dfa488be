#include "projlab/closedforms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "projlab/error.hpp"
#include "projlab/primes.hpp"

namespace projlab {
namespace {

constexpr double kPi = std::numbers::pi;

// Adaptive Gauss-Legendre on one smooth panel: 16 vs 32 points, bisect on disagreement.
template <class F>
double panel(F&& f, double a, double b, double tol, int depth) {
  double coarse = integrate_gl(f, a, b, 16);
  double fine = integrate_gl(f, a, b, 32);
  if (std::abs(fine - coarse) <= tol || depth <= 0) return fine;
  double mid = 0.5 * (a + b);
  return panel(f, a, mid, 0.5 * tol, depth - 1) + panel(f, mid, b, 0.5 * tol, depth - 1);
}

}  // namespace

double lebesgue_constant(unsigned m, bool analytic) {
  // |sin(w t) / sin(t/2)| on [0, pi]; zeros at k pi / w split it into smooth panels.
  const double w = analytic ? 0.5 * (m + 1.0) : m + 0.5;
  auto f = [w](double t) { return std::abs(std::sin(w * t) / std::sin(0.5 * t)); };
  std::vector<double> cuts{0.0};
  for (unsigned k = 1; k * kPi / w < kPi; ++k) cuts.push_back(k * kPi / w);
  cuts.push_back(kPi);
  double sum = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) sum += panel(f, cuts[k], cuts[k + 1], 1e-14, 12);
  return sum / kPi;
}

double lebesgue_lower(unsigned m) { return 4 / (kPi * kPi) * std::log(m + 1.0); }

double lebesgue_upper(unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "upper Lebesgue bound needs m >= 1");
  return 3 + std::log(static_cast<double>(m));
}

double proj_hilbert_homog(unsigned n, unsigned m) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  double dn = n, dm = m;
  return boost::math::tgamma_ratio(dn + dm, 1 + dm) * boost::math::tgamma_ratio(1 + dm / 2, dn + dm / 2);
}

double hilbert_coefficient(unsigned n, unsigned k) {
  double dn = n, dk = k;
  return boost::math::tgamma_ratio(dn + dk, dk + 1) / boost::math::tgamma(dn);
}

double proj_hilbert_invariant(unsigned n, const std::vector<unsigned>& degrees, const QuadratureConfig& cfg) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "invariant formula needs n >= 2");
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "degree set must be nonempty");
  std::vector<unsigned> ks = degrees;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.size() == 1) {
    // Single degree: the angular integral is 2 pi c_k r^k.
    return proj_hilbert_homog(n, ks[0]);
  }
  std::vector<double> c;
  for (unsigned k : ks) c.push_back(hilbert_coefficient(n, k));
  using boost::math::quadrature::gauss_kronrod;
  const double inner_tol = std::min(1e-10, cfg.rel_tol);
  double worst = 0;
  auto angular = [&](double r) {
    auto g = [&](double theta) {
      std::complex<double> s = 0;
      for (std::size_t i = 0; i < ks.size(); ++i) s += c[i] * std::pow(r, ks[i]) * std::polar(1.0, ks[i] * theta);
      return std::abs(s);
    };
    // Real coefficients: |p(r e^{-i theta})| = |p(r e^{i theta})|.
    double err = 0;
    double v = 2 * gauss_kronrod<double, 31>::integrate(g, 0.0, kPi, cfg.max_subdivisions, inner_tol, &err);
    worst = std::max(worst, err / std::max(v, 1e-300));
    return v;
  };
  auto radial = [&](double r) { return angular(r) * std::pow(1 - r * r, static_cast<double>(n) - 2) * r; };
  double err = 0;
  double outer = gauss_kronrod<double, 31>::integrate(radial, 0.0, 1.0, cfg.max_subdivisions, 1e-9, &err);
  double value = (n - 1.0) / kPi * outer;
  if (err > 1e-6 * std::abs(outer) || worst > 1e-6)
    throw Error(ErrorCode::QuadratureFailure, "radial integral error estimate too large");
  return value;
}

double proj_l2(unsigned n, Field field) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  double dn = n;
  if (field == Field::Complex)
    return std::sqrt(kPi) / 2 * boost::math::tgamma_ratio(dn + 1, dn + 0.5);
  return 2 / std::sqrt(kPi) * boost::math::tgamma_ratio((dn + 2) / 2, (dn + 1) / 2);
}

double proj_l1_real(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  return proj_l2(n % 2 == 1 ? n : n - 1, Field::Real);
}

double proj_l1_complex(unsigned n, double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (n == 1) return 1;
  // Split: int_0^1 (1-J0^n)/t^2 + int_1^inf 1/t^2 - int_1^T J0^n/t^2, and
  // int_T^inf |J0|^n/t^2 <= (2/pi)^{n/2} T^{-1-n/2} / (1+n/2) <= tol/2.
  const double half_n = 0.5 * n;
  double T = std::pow(std::pow(2 / kPi, half_n) / ((1 + half_n) * 0.5 * tol), 1 / (1 + half_n));
  T = std::max(T, 30.0);
  auto head = [n](double t) {
    double j = bessel_j0(t);
    // 1 - J0^n, accurate near t = 0.
    return -std::expm1(n * std::log(j)) / (t * t);
  };
  double value = integrate_gl(head, 0.0, 1.0, 32) + 1.0;
  auto body = [n](double t) { return std::pow(bessel_j0(t), static_cast<double>(n)) / (t * t); };
  const double len = 2.0;
  double tail = 0;
  for (double a = 1.0; a < T; a += len) tail += integrate_gl(body, a, std::min(a + len, T), 24);
  return value - tail;
}

double trig_product(const std::vector<unsigned>& degrees) {
  double p = 1;
  for (unsigned d : degrees) p *= lebesgue_constant(d);
  return p;
}

double kappa_constant() {
  static const double value = [] {
    const std::uint64_t limit = 2'000'000;
    double log_prod = 0;
    for (std::uint64_t p : primes_up_to(limit)) {
      double x = kPi / static_cast<double>(p);
      log_prod += std::log(std::sin(x) / x);
    }
    // log sinc(x) ~ -x^2/6 and sum_{p > P} 1/p^2 ~ 1/(P log P).
    double P = static_cast<double>(limit);
    log_prod -= kPi * kPi / 6 / (P * std::log(P));
    return std::exp(-log_prod);
  }();
  return value;
}

}  // namespace projlab
