#include <cmath>

#include "projlab/boolean.hpp"
#include "projlab/cli.hpp"
#include "projlab/closedforms.hpp"
#include "projlab/error.hpp"

namespace projlab::cli {

namespace {

Row make(const std::string& q, std::vector<std::pair<std::string, std::string>> p, double v, std::string prov) {
  Row r;
  r.quantity = q;
  r.params = std::move(p);
  r.value = v;
  r.provenance = std::move(prov);
  return r;
}

unsigned upto(const RunConfig& cfg, unsigned fallback) {
  return cfg.n ? static_cast<unsigned>(std::min<std::uint64_t>(*cfg.n, 1000)) : fallback;
}

}  // namespace

Result table(const std::string& name, const RunConfig& cfg) {
  Result out;
  if (name == "boolean-limits") {
    unsigned top = cfg.d ? static_cast<unsigned>(std::min<std::uint64_t>(*cfg.d, 16)) : 8;
    for (unsigned d = 1; d <= top; ++d) {
      Row r = make("boolean-limit", {{"d", std::to_string(d)}}, boolean_limit(d), "Boolean cube CLT limit E|P_d(Z)|");
      r.extra["polynomial"] = pd_polynomial(d).str();
      out.rows.push_back(std::move(r));
    }
  } else if (name == "grunbaum") {
    unsigned top = upto(cfg, 10);
    for (unsigned n = 1; n <= top; ++n) {
      std::vector<std::pair<std::string, std::string>> p{{"n", std::to_string(n)}};
      auto with = [&](const char* f) {
        auto q = p;
        q.emplace_back("field", f);
        return q;
      };
      out.rows.push_back(make("proj-l2", with("real"), proj_l2(n, Field::Real), "Grunbaum-Rutovitz"));
      out.rows.push_back(make("proj-l2", with("complex"), proj_l2(n, Field::Complex), "Grunbaum-Rutovitz"));
      out.rows.push_back(make("proj-l1", with("real"), proj_l1_real(n), "Grunbaum-Rutovitz"));
      out.rows.push_back(make("proj-l1", with("complex"), proj_l1_complex(n, cfg.tol), "Grunbaum-Rutovitz"));
    }
  } else if (name == "lebesgue") {
    unsigned top = cfg.m ? static_cast<unsigned>(std::min<std::uint64_t>(*cfg.m, 2000)) : 20;
    for (unsigned m = 0; m <= top; ++m) {
      Row r = make("lebesgue", {{"m", std::to_string(m)}}, lebesgue_constant(m), "Lebesgue constant");
      r.lower = lebesgue_lower(m);
      if (m >= 1) r.upper = lebesgue_upper(m);
      out.rows.push_back(std::move(r));
    }
  } else if (name == "rw") {
    unsigned top = upto(cfg, 6);
    unsigned mtop = cfg.m ? static_cast<unsigned>(std::min<std::uint64_t>(*cfg.m, 50)) : 6;
    for (unsigned n = 2; n <= top; ++n)
      for (unsigned m = 1; m <= mtop; ++m) {
        Row r = make("rw", {{"n", std::to_string(n)}, {"m", std::to_string(m)}}, proj_hilbert_homog(n, m),
                     "Ryll-Wojtaszczyk");
        r.upper = std::sqrt(static_cast<double>(full_count(m, n)));
        out.rows.push_back(std::move(r));
      }
  } else if (name == "harpo") {
    for (std::uint64_t x : {10u, 30u, 100u, 300u, 1000u}) {
      auto e = dirichlet_projection(x, std::nullopt, cfg.samples, cfg.seed, cfg.workers);
      double scale = std::sqrt(static_cast<double>(x)) / std::pow(std::log(std::log(static_cast<double>(x))), 0.25);
      Row r = make("harpo", {{"x", std::to_string(x)}}, e.mean / scale, "sqrt(x)/(log log x)^{1/4} shape (ratio only)");
      r.std_error = e.std_error / scale;
      r.extra["lambda"] = e.mean;
      r.extra["samples"] = e.samples;
      out.rows.push_back(std::move(r));
    }
  } else {
    throw Error(ErrorCode::Parse, "unknown table '" + name + "' (boolean-limits, grunbaum, lebesgue, rw, harpo)");
  }
  return out;
}

}  // namespace projlab::cli
