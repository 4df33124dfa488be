#include "projlab/characteristics.hpp"

#include <algorithm>
#include <cmath>

#include "projlab/error.hpp"

namespace projlab {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Bounds: return "bounds";
    case Provenance::BruteForce: return "oracle";
  }
  return "unknown";
}

double Characteristic::value() const {
  if (!exact()) throw Error(ErrorCode::InvalidArgument, "characteristic is an interval");
  return lo;
}

namespace {

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

Characteristic make(const SequenceSpace& space, const MultiIndex& alpha, double log_lo, double log_hi,
                    Provenance prov, std::string source) {
  Characteristic c;
  c.lo = std::exp(log_lo);
  c.hi = std::exp(log_hi);
  c.provenance = prov;
  c.source = std::move(source);
  c.space = space;
  c.alpha = alpha;
  return c;
}

void check(const SequenceSpace& space, const MultiIndex& alpha) {
  if (alpha.dimension() != space.dimension())
    throw Error(ErrorCode::DimensionMismatch, "alpha " + to_string(alpha) + " vs space " + space.describe());
  if (alpha.degree() == 0) throw Error(ErrorCode::InvalidArgument, "characteristic needs |alpha| >= 1");
}

}  // namespace

double log_l1_characteristic(const MultiIndex& alpha) {
  double s = xlogx(alpha.degree());
  for (unsigned a : alpha.entries()) s -= xlogx(a);
  return s;
}

Characteristic characteristic_closed(const SequenceSpace& space, const MultiIndex& alpha) {
  check(space, alpha);
  const double m = alpha.degree();
  switch (space.family()) {
    case SpaceFamily::LInfty:
      return make(space, alpha, 0, 0, Provenance::ClosedForm, "Dineen");
    case SpaceFamily::Lr: {
      double v = log_l1_characteristic(alpha) / space.r();
      return make(space, alpha, v, v, Provenance::ClosedForm, "Dineen");
    }
    case SpaceFamily::Nakano:
    case SpaceFamily::NakanoDual: {
      double total = 0, parts = 0;
      for (std::size_t i = 0; i < alpha.dimension(); ++i) {
        double s = alpha[i] / space.exponents()[i];
        total += s;
        parts += xlogx(s);
      }
      double v = xlogx(total) - parts;
      if (space.family() == SpaceFamily::NakanoDual) v = log_l1_characteristic(alpha) - v;
      return make(space, alpha, v, v, Provenance::ClosedForm, "Nakano characteristic");
    }
    case SpaceFamily::Mixed: {
      const double ip = inv(space.p()), iq = inv(space.q());
      double v = ip * xlogx(m);
      for (std::size_t i = 0; i < space.rows(); ++i) {
        double row = 0;
        for (std::size_t j = 0; j < space.cols(); ++j) {
          double a = alpha[i * space.cols() + j];
          row += a;
          v -= iq * xlogx(a);
        }
        v += (iq - ip) * xlogx(row);
      }
      return make(space, alpha, v, v, Provenance::ClosedForm, "mixed-norm characteristic");
    }
    case SpaceFamily::Lorentz: {
      const double r = space.r(), s = space.s();
      if (alpha.is_tetrahedral()) {
        double v = m * std::log(space.fundamental(static_cast<std::size_t>(m)));
        return make(space, alpha, v, v, Provenance::ClosedForm, "symmetric tetrahedral");
      }
      if (r == s) {
        double v = log_l1_characteristic(alpha) / r;
        return make(space, alpha, v, v, Provenance::ClosedForm, "Dineen");
      }
      auto star = alpha.decreasing();
      if (std::isinf(s)) {
        double base = 0;
        for (std::size_t k = 1; k <= star.size(); ++k) base += star[k - 1] * std::log(static_cast<double>(k)) / r;
        // Both Lorentz norms sit between l_inf and l_1, so 1 <= c <= m^m/alpha^alpha.
        return make(space, alpha, std::max(base, 0.0),
                    std::min(base + m * std::log(conjugate_exponent(r)), log_l1_characteristic(alpha)),
                    Provenance::Bounds, "Marcinkiewicz characteristic");
      }
      if (s == 1) {
        double rc = conjugate_exponent(r);
        double top = log_l1_characteristic(alpha);
        for (std::size_t k = 1; k <= star.size(); ++k) top -= star[k - 1] * std::log(static_cast<double>(k)) / rc;
        return make(space, alpha, std::max(top - m * std::log(r), 0.0), std::min(top, log_l1_characteristic(alpha)),
                    Provenance::Bounds, "Lorentz characteristic");
      }
      break;
    }
  }
  throw Error(ErrorCode::NoClosedForm, space.describe() + " at " + to_string(alpha));
}

Characteristic characteristic_bruteforce(const SequenceSpace& space, const MultiIndex& alpha,
                                         const OptimizerConfig& config) {
  check(space, alpha);
  if (space.dimension() > 12) throw Error(ErrorCode::BudgetExceeded, "oracle supports dimension <= 12");
  std::vector<std::size_t> active = alpha.support();
  SphereObjective f = [&](std::span<const double>, std::span<const double> log_z) {
    double s = 0;
    for (std::size_t i : active) s += alpha[i] * log_z[i];
    return s;
  };
  std::vector<std::vector<double>> warm;
  const double m = alpha.degree();
  for (double r : {1.0, 2.0, space.r()}) {
    if (std::isinf(r) || r < 1) continue;
    std::vector<double> z(space.dimension(), 0.0);
    for (std::size_t i : active) z[i] = std::pow(alpha[i] / m, 1 / r);
    warm.push_back(std::move(z));
  }
  SphereMaximum best = maximize_on_sphere(space, active, f, config, warm);
  if (!best.converged) {
    throw Error(ErrorCode::OracleInconclusive, space.describe() + " at " + to_string(alpha) +
                                                   ": best interval [1, " + std::to_string(std::exp(-best.log_value)) +
                                                   "]");
  }
  double v = -best.log_value;
  return make(space, alpha, v, v, Provenance::BruteForce, "oracle");
}

Characteristic characteristic(const SequenceSpace& space, const MultiIndex& alpha, const OptimizerConfig& config) {
  try {
    return characteristic_closed(space, alpha);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoClosedForm) throw;
  }
  return characteristic_bruteforce(space, alpha, config);
}

double duality_defect(const SequenceSpace& space, const MultiIndex& alpha, CharacteristicRoute route,
                      const OptimizerConfig& config) {
  SequenceSpace dual = space.kothe_dual();
  auto eval = [&](const SequenceSpace& x) {
    return route == CharacteristicRoute::Closed ? characteristic_closed(x, alpha).value()
                                                : characteristic_bruteforce(x, alpha, config).value();
  };
  double log_target = log_l1_characteristic(alpha);
  double log_prod = std::log(eval(space)) + std::log(eval(dual));
  return std::abs(std::expm1(log_prod - log_target));
}

Characteristic characteristic_product(const Characteristic& cx, const Characteristic& cy) {
  if (!(cx.alpha == cy.alpha)) throw Error(ErrorCode::MismatchedAlpha, "product of characteristics");
  Characteristic c = cx;
  c.lo = cx.lo * cy.lo;
  c.hi = cx.hi * cy.hi;
  c.provenance = cx.exact() && cy.exact() ? cx.provenance : Provenance::Bounds;
  c.source = "pointwise product";
  return c;
}

Characteristic characteristic_interpolate(const Characteristic& c0, const Characteristic& c1, double theta) {
  if (!(c0.alpha == c1.alpha)) throw Error(ErrorCode::MismatchedAlpha, "interpolation of characteristics");
  if (!(theta > 0 && theta < 1)) throw Error(ErrorCode::InvalidArgument, "theta must lie in (0,1)");
  Characteristic c = c0;
  c.lo = std::exp((1 - theta) * std::log(c0.lo) + theta * std::log(c1.lo));
  c.hi = std::exp((1 - theta) * std::log(c0.hi) + theta * std::log(c1.hi));
  c.provenance = c0.exact() && c1.exact() ? c0.provenance : Provenance::Bounds;
  c.source = "Calderon product";
  return c;
}

}  // namespace projlab
