#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace projlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using ComplexVector = std::vector<std::complex<double>>;

// Conjugate exponent, 1 <-> inf.
double conjugate_exponent(double r);

enum class SpaceFamily { Lr, Lorentz, Nakano, NakanoDual, Mixed, LInfty };

// A finite-dimensional Banach sequence lattice. Every norm here depends only on |z_i|.
class SequenceSpace {
 public:
  static SequenceSpace lr(std::size_t n, double r);
  static SequenceSpace linf(std::size_t n);
  // d(w,s) with w_k = k^{s/r} - (k-1)^{s/r}; s = inf is the Marcinkiewicz sup form.
  static SequenceSpace lorentz(std::size_t n, double r, double s);
  static SequenceSpace nakano(std::vector<double> exponents);
  // Exact dual norm of the Nakano space: sup { sum y_i x_i : sum x_i^{p_i} <= 1 }.
  static SequenceSpace nakano_dual(std::vector<double> exponents);
  // l_p over `rows` rows of l_q^{cols}; coordinates are stored row-major.
  static SequenceSpace mixed(double p, double q, std::size_t rows, std::size_t cols);

  SpaceFamily family() const { return family_; }
  std::size_t dimension() const { return dimension_; }
  double r() const { return r_; }
  double s() const { return s_; }
  double p() const { return r_; }
  double q() const { return s_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& exponents() const { return exponents_; }

  bool is_symmetric() const;

  // Norm of the vector with moduli `abs_values` (all >= 0).
  double norm_abs(std::span<const double> abs_values) const;
  double norm(std::span<const std::complex<double>> z) const;
  double norm(std::span<const double> z) const;

  double fundamental(std::size_t k) const;
  // phi_{X'}(k); for Lorentz spaces k / phi_X(k).
  double dual_fundamental(std::size_t k) const;

  SequenceSpace kothe_dual() const;

  // Canonical descriptor, e.g. "lr:2", "lorentz:2,1", "mixed:1,2,4x3".
  std::string describe() const;

 private:
  SequenceSpace() = default;

  double nakano_norm(std::span<const double> a) const;
  double nakano_dual_norm(std::span<const double> a) const;

  SpaceFamily family_ = SpaceFamily::Lr;
  std::size_t dimension_ = 0;
  double r_ = 2;
  double s_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> exponents_;
  std::vector<double> lorentz_weights_;
};

// Parses "lr:2", "lr:inf", "linf", "lorentz:2,1", "lorentz:2,inf", "nakano:1.5,2,3",
// "nakano-dual:1.5,2,3", "mixed:1,2,4x3". `n` is used where the descriptor carries no dimension.
SequenceSpace parse_space(const std::string& text, std::size_t n);

// Entries sorted by modulus descending.
std::vector<double> decreasing_rearrangement(std::span<const double> abs_values);

}  // namespace projlab
