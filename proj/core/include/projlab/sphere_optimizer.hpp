#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "projlab/spaces.hpp"

namespace projlab {

struct OptimizerConfig {
  int restarts = 32;
  std::uint64_t seed = 0x5eed;
  double grad_tol = 1e-10;
  int max_iterations = 2000;
  // Points per simplex edge for the grid fallback; 0 picks one from the active dimension.
  int grid_resolution = 0;
  unsigned workers = 1;
};

// Log of the objective at a nonnegative unit vector z; log_z holds log z_i (-inf for zeros).
using SphereObjective = std::function<double(std::span<const double> z, std::span<const double> log_z)>;

struct SphereMaximum {
  double log_value = 0;
  std::vector<double> point;
  int agreeing_restarts = 0;
  int restarts = 0;
  bool converged = false;
};

// Maximizes a log-objective over the nonnegative part of the unit sphere of `space`,
// varying only the `active` coordinates (all others are held at zero). Points are
// parametrized as z = e^u / ||e^u||; each restart runs gradient ascent with
// Barzilai-Borwein steps and backtracking, then a pattern-search polish that also
// copes with kinks of max-type norms.
SphereMaximum maximize_on_sphere(const SequenceSpace& space, const std::vector<std::size_t>& active,
                                 const SphereObjective& objective, const OptimizerConfig& config,
                                 const std::vector<std::vector<double>>& warm_starts = {});

}  // namespace projlab
