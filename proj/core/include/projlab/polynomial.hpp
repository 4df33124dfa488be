#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace projlab {

using Rational = boost::multiprecision::cpp_rational;

// Real univariate polynomial c_0 + c_1 t + ... + c_d t^d.
struct UniPoly {
  std::vector<double> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<double> c) : coeffs(std::move(c)) {}

  int degree() const;
  double operator()(double t) const;
  std::string str() const;
};

using RationalPoly = std::vector<Rational>;

// Distinct real roots, ascending, each refined by bisection to width <= tol.
// Isolation uses an exact Sturm sequence over the rationals.
std::vector<double> real_roots(const UniPoly& p, double tol = 1e-13);

// E|p(Z)| for a standard normal Z, integrated exactly between consecutive roots
// with Gaussian partial-moment recurrences.
double gaussian_abs_moment(const UniPoly& p);
// E p(Z).
double gaussian_moment(const UniPoly& p);

}  // namespace projlab
