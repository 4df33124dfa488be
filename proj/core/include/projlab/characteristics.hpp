#pragma once

#include <string>

#include "projlab/indexsets.hpp"
#include "projlab/spaces.hpp"
#include "projlab/sphere_optimizer.hpp"

namespace projlab {

enum class Provenance { ClosedForm, Bounds, BruteForce };

const char* to_string(Provenance p);

// c_X(alpha) = 1 / sup_{B_X} |z^alpha|, or an interval [lo, hi] when only bounds are known.
struct Characteristic {
  double lo = 1;
  double hi = 1;
  Provenance provenance = Provenance::ClosedForm;
  std::string source;
  SequenceSpace space = SequenceSpace::lr(1, 2);
  MultiIndex alpha;

  bool exact() const { return lo == hi; }
  // Exact value; throws for intervals.
  double value() const;
  double midpoint() const { return 0.5 * (lo + hi); }
};

// log(m^m / alpha^alpha), the l_1 characteristic.
double log_l1_characteristic(const MultiIndex& alpha);

Characteristic characteristic_closed(const SequenceSpace& space, const MultiIndex& alpha);
Characteristic characteristic_bruteforce(const SequenceSpace& space, const MultiIndex& alpha,
                                         const OptimizerConfig& config = {});
// Closed form if one exists (interval or exact), otherwise the oracle.
Characteristic characteristic(const SequenceSpace& space, const MultiIndex& alpha,
                              const OptimizerConfig& config = {});

enum class CharacteristicRoute { Closed, Oracle };

// |c_X c_X' - m^m/alpha^alpha| / (m^m/alpha^alpha).
double duality_defect(const SequenceSpace& space, const MultiIndex& alpha,
                      CharacteristicRoute route = CharacteristicRoute::Closed, const OptimizerConfig& config = {});

Characteristic characteristic_product(const Characteristic& cx, const Characteristic& cy);
Characteristic characteristic_interpolate(const Characteristic& c0, const Characteristic& c1, double theta);

}  // namespace projlab
