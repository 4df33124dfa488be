#pragma once

#include <cstddef>
#include <vector>

namespace projlab {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 20;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule, cached per n.
const GaussRule& gauss_legendre(std::size_t n);

template <class F>
double integrate_gl(F&& f, double a, double b, std::size_t n) {
  const GaussRule& rule = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a), sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

// J_0 from (1/pi) int_0^pi cos(t sin phi) dphi (128-point Gauss-Legendre) for |t| <= 25,
// Hankel asymptotic expansion beyond.
double bessel_j0(double t);

}  // namespace projlab
