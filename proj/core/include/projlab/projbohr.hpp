#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "projlab/characteristics.hpp"
#include "projlab/indexsets.hpp"
#include "projlab/montecarlo.hpp"
#include "projlab/spaces.hpp"
#include "projlab/sphere_optimizer.hpp"

namespace projlab {

enum class BoundKind { Lower, Upper, Estimate, Prediction };

const char* to_string(BoundKind k);

struct BoundEntry {
  std::string label;
  BoundKind kind = BoundKind::Estimate;
  double value = 0;
  double std_error = 0;
  std::string provenance;
  // Quantity the entry refers to, e.g. "lambda", "lambda_hat", "K".
  std::string target;
};

struct BoundReport {
  std::string quantity;
  std::vector<BoundEntry> entries;
  bool consistent = true;
  std::vector<std::string> issues;

  void add(std::string label, BoundKind kind, double value, std::string provenance, std::string target,
           double std_error = 0);
  // Per target: every lower <= every upper, and every estimate inside [max lower, min upper]
  // widened by 3 standard errors and a relative tolerance.
  void check_consistency(double rel_tol = 1e-9);
  const BoundEntry* find(const std::string& label) const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct PolyProjResult {
  double lo = 0;
  double hi = 0;
  std::vector<double> point;
  bool interval = false;
  double value() const { return lo; }
};

// lambda-hat = sup_{B_X} sum_{alpha in J} c_X(alpha) |z^alpha|. The optimizer value is a
// high-confidence lower estimate of the supremum; Lorentz intervals give [lo, hi].
PolyProjResult poly_proj_const(const SequenceSpace& space, const IndexSet& j, const OptimizerConfig& config = {});

struct UncondEstimate {
  double value = 1;
  bool lower_bound_only = false;
  std::vector<std::complex<double>> coefficients;
};

// sup_{B_X} |P| for P = sum c_alpha z^alpha, estimated by phase grids plus local ascent;
// never below the Parseval/Cauchy floors.
double poly_sup_norm(const SequenceSpace& space, const IndexSet& j, const std::vector<std::complex<double>>& c,
                     const OptimizerConfig& config = {});

// Lower estimate of chi_mon(P_J(X_n)).
UncondEstimate uncond_basis_lower(const SequenceSpace& space, const IndexSet& j, const OptimizerConfig& config = {},
                                  int budget = 300);

// uncond_basis_lower(J_m)^{-1/m}: an upper estimate of K_m.
double bohr_radius_homog(const SequenceSpace& space, const IndexSet& j, unsigned m, const OptimizerConfig& config = {});

// Largest r with a + (1-a^2) sum_{k>=1} a^{k-1} r^k <= 1 for f_a = (a - z)/(1 - a z).
double mobius_witness_radius(double a);
// min over a grid in (0,1) of mobius_witness_radius.
double bohr_witness_estimate();
// Largest |c_m| - (1 - |c_0|^2) over random scaled Blaschke products (should be <= 0).
double wiener_max_violation(int functions, int degree, std::uint64_t seed);

BoundReport bohr_sandwich(const SequenceSpace& space, const IndexSet& j, unsigned m_max,
                          const OptimizerConfig& config = {});

BoundReport bounds_catalog(const SequenceSpace& space, const IndexSet& j,
                           const std::optional<MCEstimate>& mc = std::nullopt, const OptimizerConfig& config = {});

}  // namespace projlab
