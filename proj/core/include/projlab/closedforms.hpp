#pragma once

#include <vector>

#include "projlab/polynomial.hpp"
#include "projlab/quadrature.hpp"

namespace projlab {

// L_m = (1/2pi) int |D_m|; with analytic = true the kernel is D_m^+ = sum_{k<=m} e^{ikt}.
double lebesgue_constant(unsigned m, bool analytic = false);
double lebesgue_lower(unsigned m);   // 4/pi^2 log(m+1)
double lebesgue_upper(unsigned m);   // 3 + log m, m >= 1

// Gamma(n+m) Gamma(1+m/2) / (Gamma(1+m) Gamma(n+m/2)).
double proj_hilbert_homog(unsigned n, unsigned m);
// Radial integral for a U_n-invariant index set with the given degrees.
double proj_hilbert_invariant(unsigned n, const std::vector<unsigned>& degrees, const QuadratureConfig& cfg = {});
// c_k(n) = (n-1+k)! / ((n-1)! k!)
double hilbert_coefficient(unsigned n, unsigned k);

enum class Field { Real, Complex };

double proj_l2(unsigned n, Field field);
// int_0^inf (1 - J_0(t)^n) / t^2 dt, tail beyond T bounded analytically.
double proj_l1_complex(unsigned n, double tol = 1e-10);
double proj_l1_real(unsigned n);

double trig_product(const std::vector<unsigned>& degrees);

// (prod_p sinc(pi/p))^{-1} over all primes.
double kappa_constant();

}  // namespace projlab
