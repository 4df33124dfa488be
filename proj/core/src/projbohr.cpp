#include "projlab/projbohr.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "projlab/closedforms.hpp"
#include "projlab/error.hpp"
#include "projlab/rng.hpp"

namespace projlab {

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    case BoundKind::Estimate: return "estimate";
    case BoundKind::Prediction: return "prediction";
  }
  return "unknown";
}

void BoundReport::add(std::string label, BoundKind kind, double value, std::string provenance, std::string target,
                      double std_error) {
  entries.push_back({std::move(label), kind, value, std_error, std::move(provenance), std::move(target)});
}

void BoundReport::check_consistency(double rel_tol) {
  consistent = true;
  issues.clear();
  std::map<std::string, std::vector<const BoundEntry*>> by_target;
  for (const auto& e : entries) by_target[e.target].push_back(&e);
  for (const auto& [target, list] : by_target) {
    for (const auto* lo : list) {
      if (lo->kind != BoundKind::Lower) continue;
      for (const auto* hi : list) {
        if (hi->kind != BoundKind::Upper) continue;
        double slack = rel_tol * std::max(std::abs(lo->value), std::abs(hi->value));
        if (lo->value > hi->value + slack) {
          consistent = false;
          issues.push_back(target + ": lower '" + lo->label + "' exceeds upper '" + hi->label + "'");
        }
      }
    }
    for (const auto* est : list) {
      if (est->kind != BoundKind::Estimate) continue;
      double band = 3 * est->std_error + rel_tol * std::abs(est->value);
      for (const auto* b : list) {
        if (b->kind == BoundKind::Lower && est->value < b->value - band - rel_tol * std::abs(b->value)) {
          consistent = false;
          issues.push_back(target + ": estimate '" + est->label + "' below lower '" + b->label + "'");
        }
        if (b->kind == BoundKind::Upper && est->value > b->value + band + rel_tol * std::abs(b->value)) {
          consistent = false;
          issues.push_back(target + ": estimate '" + est->label + "' above upper '" + b->label + "'");
        }
      }
    }
  }
}

const BoundEntry* BoundReport::find(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    rows.push_back({{"label", e.label},
                    {"kind", projlab::to_string(e.kind)},
                    {"target", e.target},
                    {"value", e.value},
                    {"stderr", e.std_error},
                    {"provenance", e.provenance}});
  }
  return {{"quantity", quantity}, {"consistent", consistent}, {"issues", issues}, {"entries", rows}};
}

std::string BoundReport::to_text() const {
  std::size_t wl = 5, wt = 6, wp = 10;
  for (const auto& e : entries) {
    wl = std::max(wl, e.label.size());
    wt = std::max(wt, e.target.size());
    wp = std::max(wp, e.provenance.size());
  }
  std::ostringstream os;
  os << quantity << (consistent ? " (consistent)" : " (INCONSISTENT)") << '\n';
  os << std::left << std::setw(static_cast<int>(wl)) << "label" << "  " << std::setw(10) << "kind" << "  "
     << std::setw(static_cast<int>(wt)) << "target" << "  " << std::setw(20) << "value" << "  " << std::setw(12)
     << "stderr" << "  " << "provenance" << '\n';
  for (const auto& e : entries) {
    std::ostringstream v, s;
    v << std::setprecision(12) << e.value;
    s << std::setprecision(4) << e.std_error;
    os << std::left << std::setw(static_cast<int>(wl)) << e.label << "  " << std::setw(10)
       << projlab::to_string(e.kind) << "  " << std::setw(static_cast<int>(wt)) << e.target << "  "
       << std::setw(20) << v.str() << "  " << std::setw(12) << s.str() << "  " << e.provenance << '\n';
  }
  for (const auto& i : issues) os << "issue: " << i << '\n';
  return os.str();
}

namespace {

std::vector<std::size_t> active_coordinates(const IndexSet& j) {
  std::vector<bool> used(j.dimension(), false);
  for (const auto& a : j)
    for (std::size_t i : a.support()) used[i] = true;
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) act.push_back(i);
  return act;
}

double log_sum_exp(const std::vector<double>& v) {
  double top = -kInf;
  for (double x : v) top = std::max(top, x);
  if (std::isinf(top)) return top;
  double s = 0;
  for (double x : v) s += std::exp(x - top);
  return top + std::log(s);
}

// log sum_alpha w_alpha z^alpha, with log_w = log of the weights.
SphereObjective weighted_monomials(const IndexSet& j, const std::vector<double>& log_w) {
  return [&j, log_w](std::span<const double>, std::span<const double> log_z) {
    std::vector<double> terms;
    terms.reserve(j.size());
    std::size_t k = 0;
    for (const auto& a : j) {
      double t = log_w[k++];
      if (std::isinf(t)) continue;
      for (std::size_t i : a.support()) t += a[i] * log_z[i];
      terms.push_back(t);
    }
    return log_sum_exp(terms);
  };
}

double sup_weighted(const SequenceSpace& space, const IndexSet& j, const std::vector<double>& log_w,
                    const OptimizerConfig& config, std::vector<double>* point = nullptr) {
  auto act = active_coordinates(j);
  if (act.empty()) {
    // Only the constant monomial.
    if (point) point->assign(space.dimension(), 0.0);
    return std::exp(log_w.front());
  }
  std::vector<std::vector<double>> warm;
  warm.emplace_back(space.dimension(), 0.0);
  for (std::size_t i : act) warm.back()[i] = 1.0;
  SphereObjective f = weighted_monomials(j, log_w);
  SphereMaximum best = maximize_on_sphere(space, act, f, config, warm);
  if (point) *point = best.point;
  return std::exp(best.log_value);
}

}  // namespace

PolyProjResult poly_proj_const(const SequenceSpace& space, const IndexSet& j, const OptimizerConfig& config) {
  if (j.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be nonempty");
  if (j.dimension() != space.dimension()) throw Error(ErrorCode::DimensionMismatch, "index set vs space");
  if (space.dimension() > 12) throw Error(ErrorCode::BudgetExceeded, "lambda-hat supports dimension <= 12");
  std::vector<double> log_lo, log_hi;
  bool interval = false;
  for (const auto& a : j) {
    if (a.degree() == 0) {
      log_lo.push_back(0);
      log_hi.push_back(0);
      continue;
    }
    Characteristic c = characteristic(space, a, config);
    log_lo.push_back(std::log(c.lo));
    log_hi.push_back(std::log(c.hi));
    interval = interval || !c.exact();
  }
  PolyProjResult out;
  out.interval = interval;
  out.lo = sup_weighted(space, j, log_lo, config, &out.point);
  out.hi = interval ? sup_weighted(space, j, log_hi, config) : out.lo;
  return out;
}

namespace {

// max over phases of |sum_alpha c_alpha rho^alpha e^{i alpha.phi}|.
double phase_sup(const IndexSet& j, const std::vector<std::size_t>& act, const std::vector<std::complex<double>>& a,
                 bool fine) {
  const std::size_t k = act.size();
  std::vector<std::vector<unsigned>> expo;
  for (const auto& alpha : j) {
    std::vector<unsigned> e(k);
    for (std::size_t t = 0; t < k; ++t) e[t] = alpha[act[t]];
    expo.push_back(std::move(e));
  }
  auto value = [&](const std::vector<double>& phi) {
    std::complex<double> s = 0;
    for (std::size_t m = 0; m < a.size(); ++m) {
      double ph = 0;
      for (std::size_t t = 0; t < k; ++t) ph += expo[m][t] * phi[t];
      s += a[m] * std::polar(1.0, ph);
    }
    return std::norm(s);
  };
  auto gradient = [&](const std::vector<double>& phi, std::vector<double>& g) {
    std::complex<double> s = 0;
    std::vector<std::complex<double>> ds(k, 0.0);
    for (std::size_t m = 0; m < a.size(); ++m) {
      double ph = 0;
      for (std::size_t t = 0; t < k; ++t) ph += expo[m][t] * phi[t];
      std::complex<double> term = a[m] * std::polar(1.0, ph);
      s += term;
      for (std::size_t t = 0; t < k; ++t) ds[t] += std::complex<double>(0, expo[m][t]) * term;
    }
    g.resize(k);
    for (std::size_t t = 0; t < k; ++t) g[t] = 2 * std::real(std::conj(s) * ds[t]);
    return std::norm(s);
  };
  if (k == 0) return std::sqrt(value({}));

  std::vector<std::pair<double, std::vector<double>>> seeds;
  auto consider = [&](std::vector<double> phi) {
    double v = value(phi);
    seeds.emplace_back(v, std::move(phi));
  };
  const double two_pi = 2 * std::numbers::pi;
  std::size_t per = k == 1 ? (fine ? 2048 : 256) : k == 2 ? (fine ? 64 : 24) : k == 3 ? (fine ? 24 : 10) : 0;
  if (per > 0) {
    std::size_t total = 1;
    for (std::size_t t = 0; t < k; ++t) total *= per;
    std::vector<double> phi(k);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (std::size_t t = 0; t < k; ++t) {
        phi[t] = two_pi * static_cast<double>(rest % per) / static_cast<double>(per);
        rest /= per;
      }
      consider(phi);
    }
  } else {
    CounterRng rng(0x9a5e, k);
    std::vector<double> phi(k);
    for (int s = 0; s < (fine ? 8000 : 1500); ++s) {
      for (auto& p : phi) p = two_pi * rng.uniform();
      consider(phi);
    }
  }
  std::partial_sort(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(4, seeds.size())),
                    seeds.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  double best = seeds.front().first;
  for (std::size_t s = 0; s < std::min<std::size_t>(4, seeds.size()); ++s) {
    std::vector<double> phi = seeds[s].second, g, trial(k);
    double v = gradient(phi, g);
    double step = 0.1;
    for (int it = 0; it < 400; ++it) {
      double gn2 = 0;
      for (double x : g) gn2 += x * x;
      if (gn2 <= 1e-28 * std::max(1.0, v * v)) break;
      bool ok = false;
      while (step > 1e-16) {
        for (std::size_t t = 0; t < k; ++t) trial[t] = phi[t] + step * g[t] / std::max(v, 1e-300);
        double tv = value(trial);
        if (tv > v) {
          phi = trial;
          ok = true;
          step *= 2;
          break;
        }
        step *= 0.5;
      }
      if (!ok) break;
      v = gradient(phi, g);
    }
    best = std::max(best, v);
  }
  return std::sqrt(best);
}

std::vector<std::complex<double>> scaled_coefficients(const IndexSet& j, const std::vector<std::complex<double>>& c,
                                                      std::span<const double> rho) {
  std::vector<std::complex<double>> a(c.size());
  std::size_t m = 0;
  for (const auto& alpha : j) {
    double w = 1;
    for (std::size_t i : alpha.support()) w *= std::pow(rho[i], alpha[i]);
    a[m] = c[m] * w;
    ++m;
  }
  return a;
}

double parseval_floor(const std::vector<std::complex<double>>& a) {
  double s = 0;
  for (const auto& x : a) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

double poly_sup_norm(const SequenceSpace& space, const IndexSet& j, const std::vector<std::complex<double>>& c,
                     const OptimizerConfig& config) {
  if (c.size() != j.size()) throw Error(ErrorCode::DimensionMismatch, "coefficient count vs index set");
  auto act = active_coordinates(j);
  if (space.family() == SpaceFamily::LInfty || act.empty()) {
    std::vector<double> rho(space.dimension(), 1.0);
    auto a = scaled_coefficients(j, c, rho);
    return std::max(phase_sup(j, act, a, true), parseval_floor(a));
  }
  SphereObjective f = [&](std::span<const double> z, std::span<const double>) {
    auto a = scaled_coefficients(j, c, z);
    return std::log(std::max(phase_sup(j, act, a, false), 1e-300));
  };
  OptimizerConfig cfg = config;
  cfg.restarts = std::min(cfg.restarts, 6);
  cfg.max_iterations = std::min(cfg.max_iterations, 200);
  cfg.grid_resolution = 4;
  std::vector<std::vector<double>> warm{std::vector<double>(space.dimension(), 0.0)};
  for (std::size_t i : act) warm.front()[i] = 1.0;
  SphereMaximum best = maximize_on_sphere(space, act, f, cfg, warm);
  auto a = scaled_coefficients(j, c, best.point);
  return std::max(phase_sup(j, act, a, true), parseval_floor(a));
}

namespace {

double majorant_sup(const SequenceSpace& space, const IndexSet& j, const std::vector<std::complex<double>>& c,
                    const OptimizerConfig& config) {
  if (space.family() == SpaceFamily::LInfty) {
    double s = 0;
    for (const auto& x : c) s += std::abs(x);
    return s;
  }
  std::vector<double> log_w;
  for (const auto& x : c) log_w.push_back(std::abs(x) > 0 ? std::log(std::abs(x)) : -kInf);
  OptimizerConfig cfg = config;
  cfg.restarts = std::min(cfg.restarts, 8);
  return sup_weighted(space, j, log_w, cfg);
}

std::vector<int> rudin_shapiro(std::size_t length) {
  std::vector<int> p{1}, q{1};
  while (p.size() < length) {
    std::vector<int> np(p), nq(p);
    np.insert(np.end(), q.begin(), q.end());
    for (int v : q) nq.push_back(-v);
    p = std::move(np);
    q = std::move(nq);
  }
  p.resize(length);
  return p;
}

}  // namespace

UncondEstimate uncond_basis_lower(const SequenceSpace& space, const IndexSet& j, const OptimizerConfig& config,
                                  int budget) {
  if (j.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be nonempty");
  if (j.dimension() != space.dimension()) throw Error(ErrorCode::DimensionMismatch, "index set vs space");
  if (space.dimension() > 6 || j.size() > 20)
    throw Error(ErrorCode::BudgetExceeded, "unconditional estimate supports dimension <= 6 and |J| <= 20");
  const std::size_t size = j.size();
  UncondEstimate out;
  out.coefficients.assign(size, 1.0);
  if (size == 1) return out;

  auto ratio = [&](const std::vector<std::complex<double>>& c) {
    double den = poly_sup_norm(space, j, c, config);
    return den > 0 ? majorant_sup(space, j, c, config) / den : 1.0;
  };

  std::vector<std::vector<std::complex<double>>> seeds;
  seeds.emplace_back(size, 1.0);
  auto act = active_coordinates(j);
  if (act.size() == 1) {
    // Members are sorted by degree in one variable.
    for (std::size_t len = 2; len <= size; len *= 2) {
      auto rs = rudin_shapiro(len);
      std::vector<std::complex<double>> c(size, 0.0);
      for (std::size_t k = 0; k < len; ++k) c[k] = rs[k];
      seeds.push_back(std::move(c));
    }
    auto rs = rudin_shapiro(size);
    seeds.emplace_back(rs.begin(), rs.end());
  }
  {
    std::vector<std::complex<double>> chirp(size);
    for (std::size_t k = 0; k < size; ++k)
      chirp[k] = std::polar(1.0, std::numbers::pi * static_cast<double>(k * k) / static_cast<double>(size));
    seeds.push_back(std::move(chirp));
  }
  CounterRng rng(config.seed, 0x0c0eull);
  for (int s = 0; s < 4; ++s) {
    std::vector<std::complex<double>> c(size);
    for (auto& x : c) x = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
    seeds.push_back(std::move(c));
  }

  double best = 0;
  std::vector<std::complex<double>> best_c;
  for (auto& c : seeds) {
    double r = ratio(c);
    if (r > best) {
      best = r;
      best_c = c;
    }
  }
  int last_gain = 0;
  double sigma = 0.5;
  for (int it = 0; it < budget; ++it) {
    std::vector<std::complex<double>> trial = best_c;
    for (auto& x : trial) {
      if (rng.uniform() < 0.5) continue;
      double mod = std::abs(x) * std::exp(0.3 * sigma * rng.normal());
      if (std::abs(x) == 0) mod = 0.2 * sigma * rng.uniform();
      double ph = std::arg(x) + sigma * rng.normal();
      x = std::polar(mod, ph);
    }
    double r = ratio(trial);
    if (r > best) {
      best = r;
      best_c = std::move(trial);
      last_gain = it;
    } else {
      sigma = std::max(0.02, sigma * 0.99);
    }
  }
  out.value = std::clamp(best, 1.0, static_cast<double>(size));
  out.coefficients = best_c;
  out.lower_bound_only = budget > 0 && last_gain >= budget * 4 / 5;
  return out;
}

double bohr_radius_homog(const SequenceSpace& space, const IndexSet& j, unsigned m, const OptimizerConfig& config) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "K_m needs m >= 1");
  IndexSet jm = j.homogeneous_part(m);
  if (jm.empty()) throw Error(ErrorCode::InvalidArgument, "no members of degree " + std::to_string(m));
  double chi = uncond_basis_lower(space, jm, config).value;
  return std::pow(chi, -1.0 / m);
}

namespace {

// a + (1 - a^2) sum_{k>=1} a^{k-1} r^k, truncated once terms drop below 1e-18, plus the
// geometric tail bound of the remainder.
double mobius_majorant(double a, double r) {
  double sum = a, term = (1 - a * a) * r;
  int k = 1;
  while (term > 1e-18 && k < 100000) {
    sum += term;
    term *= a * r;
    ++k;
  }
  return sum + term / (1 - a * r);
}

}  // namespace

double mobius_witness_radius(double a) {
  if (!(a > 0 && a < 1)) throw Error(ErrorCode::InvalidArgument, "witness parameter must lie in (0,1)");
  double lo = 0, hi = 1;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mobius_majorant(a, mid) <= 1)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

namespace {

std::vector<double> witness_grid() {
  std::vector<double> g;
  for (int k = 1; k < 1000; ++k) g.push_back(k / 1000.0);
  for (int e = 4; e <= 7; ++e) g.push_back(1 - std::pow(10.0, -e));
  return g;
}

}  // namespace

double bohr_witness_estimate() {
  double best = 1;
  for (double a : witness_grid()) best = std::min(best, mobius_witness_radius(a));
  return best;
}

double wiener_max_violation(int functions, int degree, std::uint64_t seed) {
  CounterRng rng(seed, 0x3131ull);
  double worst = -kInf;
  for (int f = 0; f < functions; ++f) {
    // Even draws are bare witnesses f_a, where the inequality is an equality at m = 1.
    const bool bare = f % 2 == 0;
    int factors = bare ? 1 : 1 + static_cast<int>(rng.uniform() * 4);
    std::vector<std::complex<double>> c(degree + 1, 0.0);
    c[0] = bare ? 1.0 : std::polar(0.2 + 0.8 * rng.uniform(), 2 * std::numbers::pi * rng.uniform());
    for (int q = 0; q < factors; ++q) {
      // (a - z) / (1 - conj(a) z): coefficients a, then conj(a)^{k-1} (|a|^2 - 1).
      std::complex<double> a = std::polar(0.95 * std::sqrt(rng.uniform()), 2 * std::numbers::pi * rng.uniform());
      if (bare) a = rng.uniform_open() * (1 - 1e-6);
      std::vector<std::complex<double>> m(degree + 1);
      m[0] = a;
      std::complex<double> pw = 1.0;
      for (int k = 1; k <= degree; ++k) {
        m[k] = pw * (std::norm(a) - 1);
        pw *= std::conj(a);
      }
      std::vector<std::complex<double>> prod(degree + 1, 0.0);
      for (int x = 0; x <= degree; ++x)
        for (int y = 0; x + y <= degree; ++y) prod[x + y] += c[x] * m[y];
      c = std::move(prod);
    }
    double bound = 1 - std::norm(c[0]);
    for (int k = 1; k <= degree; ++k) worst = std::max(worst, std::abs(c[k]) - bound);
  }
  return worst;
}

BoundReport bohr_sandwich(const SequenceSpace& space, const IndexSet& j, unsigned m_max,
                          const OptimizerConfig& config) {
  if (m_max > 8) throw Error(ErrorCode::InvalidArgument, "m_max must be <= 8");
  BoundReport rep;
  rep.quantity = "Bohr radius K(" + space.describe() + ", " + to_string(j.kind()) + ")";
  double inf_km = 1;
  unsigned arg_inf = 0;
  for (unsigned m = 1; m <= m_max; ++m) {
    IndexSet jm = j.homogeneous_part(m);
    if (jm.empty()) continue;
    double km = bohr_radius_homog(space, j, m, config);
    rep.add("K_" + std::to_string(m), BoundKind::Estimate, km, "monomial unconditional constant", "K_m");
    rep.add("K_" + std::to_string(m) + " trivial floor", BoundKind::Lower,
            std::pow(static_cast<double>(jm.size()), -1.0 / m), "chi_mon <= |J_m|", "K_m");
    rep.add("K_m ceiling", BoundKind::Upper, 1.0, "chi_mon >= 1", "K_m");
    if (jm.size() == tetrahedral_count(m, space.dimension()) &&
        std::all_of(jm.begin(), jm.end(), [](const MultiIndex& a) { return a.is_tetrahedral(); })) {
      double n = static_cast<double>(space.dimension());
      rep.add("K_" + std::to_string(m) + " 2-convex shape", BoundKind::Prediction,
              std::pow(m / (n + m), (m - 1.0) / (2.0 * m)), "2-convex Bohr radius asymptotics (constants unknown)",
              "K_m");
    }
    if (km < inf_km || arg_inf == 0) {
      inf_km = std::min(inf_km, km);
      arg_inf = m;
    }
  }
  rep.add("inf K_m", BoundKind::Upper, inf_km, "Bohr vs unconditional constants", "K");
  rep.add("inf K_m / 3", BoundKind::Lower, inf_km / 3, "Bohr vs unconditional constants", "K");
  if (arg_inf > 0) rep.add("arg inf m", BoundKind::Prediction, arg_inf, "homogenizing index", "m");

  if (space.dimension() == 1) {
    double witness = bohr_witness_estimate();
    rep.add("Mobius witness K(D)", BoundKind::Estimate, witness, "Mobius extremal family", "K(D)");
    rep.add("Bohr 1/3", BoundKind::Lower, 1.0 / 3 - 1e-3, "Bohr", "K(D)");
    rep.add("Bohr 1/3 + 0.02", BoundKind::Upper, 1.0 / 3 + 0.02, "Bohr", "K(D)");
    bool below_ok = true;
    for (double a : witness_grid()) below_ok = below_ok && mobius_majorant(a, 1.0 / 3) <= 1 + 1e-12;
    bool above_fails = mobius_majorant(1 - 1e-3, 1.0 / 3 + 0.02) > 1;
    if (!below_ok) rep.issues.push_back("majorant exceeds 1 at r = 1/3");
    if (!above_fails) rep.issues.push_back("majorant not violated at r = 1/3 + 0.02");
    double wiener = wiener_max_violation(200, 24, config.seed);
    rep.add("Wiener max violation", BoundKind::Estimate, wiener, "Wiener coefficient inequality", "wiener");
    rep.add("Wiener tolerance", BoundKind::Upper, 1e-9, "Wiener coefficient inequality", "wiener");
    auto saved = rep.issues;
    rep.check_consistency(1e-6);
    rep.issues.insert(rep.issues.end(), saved.begin(), saved.end());
    rep.consistent = rep.consistent && saved.empty();
    return rep;
  }
  rep.check_consistency(1e-6);
  return rep;
}

namespace {

bool is_full_homogeneous(const IndexSet& j, unsigned m) {
  return j.is_homogeneous() && j.size() == full_count(m, j.dimension());
}

// Degrees k such that J is the union of the full Lambda(k, n).
std::optional<std::vector<unsigned>> invariant_degrees(const IndexSet& j) {
  std::vector<unsigned> ks;
  for (unsigned k = 0; k <= j.max_degree(); ++k) {
    IndexSet part = j.homogeneous_part(k);
    if (part.empty()) continue;
    if (part.size() != full_count(k, j.dimension())) return std::nullopt;
    ks.push_back(k);
  }
  return ks;
}

// Box {alpha : alpha_j <= d_j} with all d_j even.
std::optional<std::vector<unsigned>> even_box(const IndexSet& j) {
  std::vector<unsigned> d(j.dimension(), 0);
  for (const auto& a : j)
    for (std::size_t i = 0; i < a.dimension(); ++i) d[i] = std::max(d[i], a[i]);
  BigInt count = 1;
  for (unsigned x : d) count *= (x + 1);
  if (count != j.size()) return std::nullopt;
  for (unsigned x : d)
    if (x % 2 != 0) return std::nullopt;
  return d;
}

}  // namespace

BoundReport bounds_catalog(const SequenceSpace& space, const IndexSet& j, const std::optional<MCEstimate>& mc,
                           const OptimizerConfig& config) {
  if (j.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be nonempty");
  if (j.dimension() != space.dimension()) throw Error(ErrorCode::DimensionMismatch, "index set vs space");
  BoundReport rep;
  rep.quantity = "projection constant of P_J(" + space.describe() + "), J = " + to_string(j.kind()) +
                 ", |J| = " + std::to_string(j.size());
  const double size = static_cast<double>(j.size());
  const std::size_t n = space.dimension();
  const unsigned m = j.max_degree();

  rep.add("Kadets-Snobar sqrt|J|", BoundKind::Upper, std::sqrt(size), "Kadets-Snobar", "lambda");

  bool have_hat = n <= 12;
  if (have_hat) {
    PolyProjResult hat = poly_proj_const(space, j, config);
    rep.add("lambda-hat", BoundKind::Upper, hat.hi, "polynomial projection constant", "lambda");
    rep.add("lambda-hat (optimizer)", BoundKind::Estimate, hat.lo, "oracle", "lambda_hat");
    if (hat.interval) rep.add("lambda-hat (upper end)", BoundKind::Estimate, hat.hi, "oracle", "lambda_hat");
  }
  if (j.is_homogeneous() && m >= 1) {
    double phi = space.dual_fundamental(n);
    double up = std::exp(m * (1 + std::log(phi)));
    rep.add("e^m phi_X'(n)^m", BoundKind::Upper, up, "lambda-hat degree-m bound", "lambda_hat");
    rep.add("e^m phi_X'(n)^m (for lambda)", BoundKind::Upper, up, "lambda-hat degree-m bound", "lambda");
    if (m == 1 && j.size() == n) {
      rep.add("phi_X'(n)", BoundKind::Lower, phi, "degree-one identity", "lambda_hat");
      rep.add("phi_X'(n) ", BoundKind::Upper, phi, "degree-one identity", "lambda_hat");
    }
    bool tetra_full = j.size() == tetrahedral_count(m, n) &&
                      std::all_of(j.begin(), j.end(), [](const MultiIndex& a) { return a.is_tetrahedral(); });
    if (tetra_full && space.is_symmetric() && m <= n) {
      double ratio = phi / space.dual_fundamental(m);
      rep.add("(phi_X'(n)/phi_X'(m))^m", BoundKind::Lower, std::pow(ratio, m), "tetrahedral sandwich", "lambda_hat");
      rep.add("e^m (phi_X'(n)/phi_X'(m))^m", BoundKind::Upper, std::exp(m) * std::pow(ratio, m),
              "tetrahedral sandwich", "lambda_hat");
    }
    if (space.family() == SpaceFamily::Lorentz && is_full_homogeneous(j, m) && space.r() > 1 && space.r() < 2) {
      rep.add("|Lambda(m,n)|^{1/r'}", BoundKind::Prediction,
              std::pow(size, 1 / conjugate_exponent(space.r())), "open conjecture, tracked only", "lambda_hat");
    }
  }
  if (space.family() == SpaceFamily::LInfty && m >= 1) {
    rep.add("sqrt|J| / sqrt2^m", BoundKind::Lower, std::sqrt(size) / std::pow(std::sqrt(2.0), m),
            "Weissler hypercontractivity", "lambda");
    std::size_t tetra = 0;
    unsigned mt = 0;
    for (const auto& a : j)
      if (a.is_tetrahedral() && a.degree() >= 1) {
        ++tetra;
        mt = std::max(mt, a.degree());
      }
    if (tetra > 0) {
      double kappa = kappa_constant();
      rep.add("sqrt|J_T| / (sqrt2^m kappa^m)", BoundKind::Lower,
              std::sqrt(static_cast<double>(tetra)) / std::pow(std::sqrt(2.0), mt) / std::pow(kappa, m),
              "Ortega-Cerda-Ounaies-Seip tetrahedral projection", "lambda");
    }
    if (auto box = even_box(j)) {
      double v = 1;
      for (unsigned d : *box) v *= lebesgue_constant(d / 2);
      rep.add("prod L_{d_j/2}", BoundKind::Lower, v * (1 - 1e-9), "Lozinski-Kharshiladze", "lambda");
      rep.add("prod L_{d_j/2} ", BoundKind::Upper, v * (1 + 1e-9), "Lozinski-Kharshiladze", "lambda");
    }
  }
  if (space.family() == SpaceFamily::Lr && space.r() == 2 && n >= 2) {
    if (auto ks = invariant_degrees(j)) {
      double v = ks->size() == 1 ? proj_hilbert_homog(static_cast<unsigned>(n), ks->front())
                                 : proj_hilbert_invariant(static_cast<unsigned>(n), *ks);
      std::string prov = ks->size() == 1 ? "Ryll-Wojtaszczyk" : "unitary-invariant radial integral";
      rep.add("exact lambda", BoundKind::Lower, v * (1 - 1e-6), prov, "lambda");
      rep.add("exact lambda ", BoundKind::Upper, v * (1 + 1e-6), prov, "lambda");
      if (ks->size() == 1) rep.add("2^{n-1}", BoundKind::Upper, std::pow(2.0, n - 1.0), "Ryll-Wojtaszczyk", "lambda");
    }
  }
  if (mc) rep.add("Monte Carlo", BoundKind::Estimate, mc->mean, "MC", "lambda", mc->std_error);
  rep.check_consistency(1e-6);
  return rep;
}

}  // namespace projlab
