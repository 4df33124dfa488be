#include "projlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace projlab {

const GaussRule& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1;
    dp = n * (x * p1 - p0) / (x * x - 1);
    double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

double bessel_j0(double t) {
  t = std::abs(t);
  if (t <= 25) {
    static const GaussRule& rule = gauss_legendre(128);
    const double half = 0.5 * std::numbers::pi;
    double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::cos(t * std::sin(half * (1 + rule.nodes[i])));
    return sum * half / std::numbers::pi;
  }
  // J0(t) = sqrt(2/(pi t)) (P cos chi - Q sin chi), chi = t - pi/4.
  double p = 0, q = 0, term = 1;
  const double mu = 0;
  for (int k = 0; k < 30; ++k) {
    // term_k = prod_{j<=k} (mu - (2j-1)^2) / (j 8 t), alternating P and Q.
    if (k > 0) {
      double j = k;
      term *= (mu - (2 * j - 1) * (2 * j - 1)) / (j * 8 * t);
    }
    if (std::abs(term) < 1e-17) break;
    if (k % 4 == 0) p += term;
    if (k % 4 == 1) q += term;
    if (k % 4 == 2) p -= term;
    if (k % 4 == 3) q -= term;
  }
  double chi = t - 0.25 * std::numbers::pi;
  return std::sqrt(2 / (std::numbers::pi * t)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace projlab
