#include "projlab/sphere_optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "projlab/error.hpp"
#include "projlab/parallel.hpp"
#include "projlab/rng.hpp"

namespace projlab {
namespace {

constexpr double kFloor = 50.0;

class Problem {
 public:
  Problem(const SequenceSpace& space, const std::vector<std::size_t>& active, const SphereObjective& f)
      : space_(space), active_(active), f_(f) {}

  std::size_t dim() const { return active_.size(); }

  void clamp(std::vector<double>& u) const {
    double top = *std::max_element(u.begin(), u.end());
    for (double& v : u) v = std::max(v, top - kFloor);
  }

  // Fills z (normalized) and returns the objective.
  double eval(const std::vector<double>& u, std::vector<double>& z) const {
    double top = *std::max_element(u.begin(), u.end());
    z.assign(space_.dimension(), 0.0);
    std::vector<double> log_z(space_.dimension(), -kInf);
    for (std::size_t k = 0; k < active_.size(); ++k) z[active_[k]] = std::exp(u[k] - top);
    double log_norm = std::log(space_.norm_abs(z));
    for (std::size_t k = 0; k < active_.size(); ++k) {
      z[active_[k]] = std::exp(u[k] - top - log_norm);
      log_z[active_[k]] = u[k] - top - log_norm;
    }
    double v = f_(z, log_z);
    return std::isnan(v) ? -kInf : v;
  }

  double eval(const std::vector<double>& u) const {
    std::vector<double> z;
    return eval(u, z);
  }

  std::vector<double> gradient(const std::vector<double>& u) const {
    std::vector<double> g(u.size()), w = u;
    const double h = 1e-6;
    for (std::size_t i = 0; i < u.size(); ++i) {
      w[i] = u[i] + h;
      double fp = eval(w);
      w[i] = u[i] - h;
      double fm = eval(w);
      w[i] = u[i];
      g[i] = std::isfinite(fp) && std::isfinite(fm) ? (fp - fm) / (2 * h) : 0.0;
    }
    return g;
  }

 private:
  const SequenceSpace& space_;
  const std::vector<std::size_t>& active_;
  const SphereObjective& f_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double ascend(const Problem& pb, std::vector<double>& u, const OptimizerConfig& cfg) {
  double val = pb.eval(u);
  std::vector<double> g = pb.gradient(u), prev_u, prev_g;
  double step = 1.0;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    double gn2 = dot(g, g);
    if (std::sqrt(gn2) <= cfg.grad_tol) break;
    if (!prev_u.empty()) {
      std::vector<double> s(u.size()), y(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        s[i] = u[i] - prev_u[i];
        y[i] = g[i] - prev_g[i];
      }
      double sy = std::abs(dot(s, y));
      if (sy > 0) step = std::clamp(dot(s, s) / sy, 1e-8, 1e3);
    }
    bool accepted = false;
    std::vector<double> trial(u.size());
    while (step > 1e-14) {
      for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] + step * g[i];
      pb.clamp(trial);
      double tv = pb.eval(trial);
      if (tv >= val + 1e-4 * step * gn2) {
        prev_u = u;
        prev_g = g;
        u = trial;
        val = tv;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    g = pb.gradient(u);
  }
  return val;
}

double polish(const Problem& pb, std::vector<double>& u, double val, CounterRng& rng) {
  const std::size_t d = u.size();
  double delta = 1e-2;
  int budget = 40000;
  std::vector<double> trial(d), anchor = u, progress;
  auto unit = [](std::vector<double> e) {
    double n = std::sqrt(dot(e, e));
    if (n > 0)
      for (double& v : e) v /= n;
    return e;
  };
  while (delta > 1e-11 && budget > 0) {
    std::vector<std::vector<double>> dirs;
    // Displacement since the last contraction goes first; it follows curved ridges of max-type norms.
    if (!progress.empty()) dirs.push_back(progress);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<double> e(d, 0.0);
      e[i] = 1.0;
      dirs.push_back(std::move(e));
    }
    if (d <= 8)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          std::vector<double> e(d, 0.0);
          e[i] = 1.0;
          e[j] = -1.0;
          dirs.push_back(unit(std::move(e)));
        }
    for (std::size_t k = 0; k < 2 * d + 4; ++k) {
      std::vector<double> e(d);
      for (double& v : e) v = rng.normal();
      dirs.push_back(unit(std::move(e)));
    }
    bool improved = false;
    for (const auto& dir : dirs) {
      for (double sign : {1.0, -1.0}) {
        for (std::size_t i = 0; i < d; ++i) trial[i] = u[i] + sign * delta * dir[i];
        pb.clamp(trial);
        double tv = pb.eval(trial);
        --budget;
        if (tv > val + 1e-15 * std::abs(val)) {
          u = trial;
          val = tv;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (improved) {
      std::vector<double> step(d);
      for (std::size_t i = 0; i < d; ++i) step[i] = u[i] - anchor[i];
      progress = unit(std::move(step));
      delta *= 1.5;
    } else {
      anchor = u;
      progress.clear();
      delta *= 0.5;
    }
  }
  return val;
}

// Compositions of `total` into d nonnegative parts.
void simplex_grid(std::size_t d, int total, std::vector<std::vector<double>>& out) {
  std::vector<double> p(d, 0.0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == d) {
      p[pos] = left;
      out.push_back(p);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      p[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

double grid_count(std::size_t d, int r) {
  double c = 1;
  for (std::size_t i = 1; i < d; ++i) c = c * (r + static_cast<double>(i)) / static_cast<double>(i);
  return c;
}

}  // namespace

SphereMaximum maximize_on_sphere(const SequenceSpace& space, const std::vector<std::size_t>& active,
                                 const SphereObjective& objective, const OptimizerConfig& config,
                                 const std::vector<std::vector<double>>& warm_starts) {
  if (active.empty()) throw Error(ErrorCode::InvalidArgument, "optimizer needs at least one active coordinate");
  for (std::size_t i : active)
    if (i >= space.dimension()) throw Error(ErrorCode::DimensionMismatch, "active coordinate out of range");
  Problem pb(space, active, objective);
  const std::size_t d = active.size();

  std::vector<std::vector<double>> starts;
  auto from_point = [&](const std::vector<double>& y, double zero_log) {
    std::vector<double> u(d);
    for (std::size_t k = 0; k < d; ++k) u[k] = y[k] > 0 ? std::log(y[k]) : zero_log;
    return u;
  };
  for (const auto& w : warm_starts) {
    if (w.size() != space.dimension()) throw Error(ErrorCode::DimensionMismatch, "warm start length");
    std::vector<double> y(d);
    for (std::size_t k = 0; k < d; ++k) y[k] = w[active[k]];
    if (std::any_of(y.begin(), y.end(), [](double v) { return v > 0; })) starts.push_back(from_point(y, -kFloor));
  }
  starts.emplace_back(d, 0.0);

  // Simplex grid fallback: the best grid points seed extra restarts.
  {
    int res = config.grid_resolution;
    if (res <= 0) {
      res = 2;
      while (res < 40 && grid_count(d, res + 1) <= 4000) ++res;
    }
    std::vector<std::vector<double>> grid;
    simplex_grid(d, res, grid);
    std::vector<std::pair<double, std::size_t>> scored;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      std::vector<double> u = from_point(grid[g], -kFloor);
      pb.clamp(u);
      scored.emplace_back(pb.eval(u), g);
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; k < std::min<std::size_t>(2, scored.size()); ++k) {
      if (!std::isfinite(scored[k].first)) continue;
      const auto& y = grid[scored[k].second];
      starts.push_back(from_point(y, -kFloor));
      starts.push_back(from_point(y, std::log(0.25)));
    }
  }
  CounterRng seed_rng(config.seed, 0xfeedull);
  while (static_cast<int>(starts.size()) < std::max(config.restarts, 1) + 4) {
    std::vector<double> u(d);
    for (double& v : u) v = std::log(seed_rng.exponential());
    starts.push_back(std::move(u));
  }

  std::vector<double> values(starts.size());
  std::vector<std::vector<double>> finals(starts.size());
  parallel_blocks(starts.size(), config.workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      std::vector<double> u = starts[r];
      pb.clamp(u);
      CounterRng rng(config.seed, r + 1);
      double v = ascend(pb, u, config);
      v = polish(pb, u, v, rng);
      if (!std::isfinite(v)) v = -kInf;
      values[r] = v;
      finals[r] = std::move(u);
    }
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < values.size(); ++r)
    if (values[r] > values[best]) best = r;
  SphereMaximum out;
  out.log_value = values[best];
  out.restarts = static_cast<int>(values.size());
  for (double v : values)
    if (std::abs(v - values[best]) <= 1e-8 * std::max(1.0, std::abs(values[best]))) ++out.agreeing_restarts;
  out.converged = std::isfinite(values[best]) && (out.agreeing_restarts >= 2 || d == 1);
  pb.eval(finals[best], out.point);
  return out;
}

}  // namespace projlab
