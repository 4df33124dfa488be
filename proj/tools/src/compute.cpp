#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "projlab/boolean.hpp"
#include "projlab/characteristics.hpp"
#include "projlab/cli.hpp"
#include "projlab/closedforms.hpp"
#include "projlab/error.hpp"
#include "projlab/indexsets.hpp"
#include "projlab/primes.hpp"

namespace projlab::cli {

namespace {

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string("missing --") + flag);
  return *v;
}

unsigned need_u(const std::optional<std::uint64_t>& v, const char* flag) {
  std::uint64_t x = need(v, flag);
  if (x > 1'000'000) throw Error(ErrorCode::InvalidArgument, std::string("--") + flag + " too large");
  return static_cast<unsigned>(x);
}

std::vector<unsigned> parse_uint_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw Error(ErrorCode::Parse, "bad integer list: " + text);
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

Row mc_row(const std::string& quantity, std::vector<std::pair<std::string, std::string>> params, const MCEstimate& e,
           std::string provenance) {
  Row r;
  r.quantity = quantity;
  r.params = std::move(params);
  r.value = e.mean;
  r.std_error = e.std_error;
  r.provenance = std::move(provenance);
  r.extra = {{"samples", e.samples}, {"seed", e.seed}, {"workers", e.workers}};
  return r;
}

Row plain(const std::string& quantity, std::vector<std::pair<std::string, std::string>> params, double value,
          std::string provenance) {
  Row r;
  r.quantity = quantity;
  r.params = std::move(params);
  r.value = value;
  r.provenance = std::move(provenance);
  return r;
}

std::size_t dimension_hint(const RunConfig& c) { return c.n ? static_cast<std::size_t>(*c.n) : 1; }

IndexSet index_set_of(const RunConfig& c) {
  if (c.index_set.empty()) throw Error(ErrorCode::InvalidArgument, "missing --index-set");
  return parse_index_set(c.index_set, dimension_hint(c), c.cap);
}

SequenceSpace space_of(const RunConfig& c, std::size_t n) { return parse_space(c.space, n); }

OptimizerConfig opt_of(const RunConfig& c) {
  OptimizerConfig o;
  o.seed = c.seed;
  o.workers = c.workers;
  return o;
}

MultiIndex alpha_of(const RunConfig& c) {
  if (c.alpha.empty()) throw Error(ErrorCode::InvalidArgument, "missing --alpha");
  return MultiIndex(parse_uint_list(c.alpha));
}

Field field_of(const RunConfig& c) {
  if (c.field == "real") return Field::Real;
  if (c.field == "complex") return Field::Complex;
  throw Error(ErrorCode::Parse, "--field must be real or complex");
}

SubsetFamily family_of(const RunConfig& c) {
  unsigned n = need_u(c.n, "n");
  std::string f = c.family;
  if (f.empty()) f = "homog:" + std::to_string(need_u(c.d, "d"));
  return parse_family(f, n);
}

std::vector<std::pair<std::string, std::string>> space_params(const RunConfig& c, const IndexSet& j) {
  return {{"space", c.space}, {"index_set", c.index_set}, {"n", str(j.dimension())}, {"size", str(j.size())}};
}

Row characteristic_row(const std::string& q, const Characteristic& ch, const RunConfig& c) {
  Row r = plain(q, {{"space", ch.space.describe()}, {"alpha", to_string(ch.alpha)}}, ch.midpoint(), ch.source);
  (void)c;
  if (!ch.exact()) {
    r.lower = ch.lo;
    r.upper = ch.hi;
  }
  r.extra["kind"] = to_string(ch.provenance);
  return r;
}

using Handler = std::function<Result(const RunConfig&)>;

const std::map<std::string, Handler>& registry() {
  static const std::map<std::string, Handler> table = {
      {"rw",
       [](const RunConfig& c) {
         unsigned n = need_u(c.n, "n"), m = need_u(c.m, "m");
         return Result{{plain("rw", {{"n", str(n)}, {"m", str(m)}}, proj_hilbert_homog(n, m), "Ryll-Wojtaszczyk")},
                       {}};
       }},
      {"hilbert-invariant",
       [](const RunConfig& c) {
         unsigned n = need_u(c.n, "n");
         auto ks = parse_uint_list(c.degrees);
         QuadratureConfig q;
         q.abs_tol = c.tol;
         return Result{{plain("hilbert-invariant", {{"n", str(n)}, {"degrees", c.degrees}},
                              proj_hilbert_invariant(n, ks, q), "unitary-invariant radial integral")},
                       {}};
       }},
      {"hilbert-coefficient",
       [](const RunConfig& c) {
         unsigned n = need_u(c.n, "n"), k = need_u(c.k, "k");
         return Result{{plain("hilbert-coefficient", {{"n", str(n)}, {"k", str(k)}}, hilbert_coefficient(n, k),
                              "reproducing kernel coefficient")},
                       {}};
       }},
      {"sphere-invariant",
       [](const RunConfig& c) {
         unsigned n = need_u(c.n, "n");
         auto ks = parse_uint_list(c.degrees);
         auto e = sphere_invariant(n, ks, c.samples, c.seed, c.workers);
         return Result{{mc_row("sphere-invariant", {{"n", str(n)}, {"degrees", c.degrees}}, e,
                               "unitary-invariant radial integral (MC)")},
                       {}};
       }},
      {"lebesgue",
       [](const RunConfig& c) {
         unsigned m = need_u(c.m, "m");
         Row r = plain("lebesgue", {{"m", str(m)}, {"analytic", c.analytic ? "1" : "0"}},
                       lebesgue_constant(m, c.analytic), "Lebesgue constant");
         if (!c.analytic) {
           r.lower = lebesgue_lower(m);
           if (m >= 1) r.upper = lebesgue_upper(m);
         }
         return Result{{r}, {}};
       }},
      {"proj-l2",
       [](const RunConfig& c) {
         unsigned n = need_u(c.n, "n");
         return Result{{plain("proj-l2", {{"n", str(n)}, {"field", c.field}}, proj_l2(n, field_of(c)),
                              "Grunbaum-Rutovitz")},
                       {}};
       }},
      {"proj-l1",
       [](const RunConfig& c) {
         unsigned n = need_u(c.n, "n");
         double v = field_of(c) == Field::Real ? proj_l1_real(n) : proj_l1_complex(n, c.tol);
         return Result{{plain("proj-l1", {{"n", str(n)}, {"field", c.field}}, v, "Grunbaum-Rutovitz")}, {}};
       }},
      {"trig-product",
       [](const RunConfig& c) {
         auto ds = parse_uint_list(c.degrees);
         return Result{{plain("trig-product", {{"degrees", c.degrees}}, trig_product(ds), "Lozinski-Kharshiladze")},
                       {}};
       }},
      {"kappa",
       [](const RunConfig&) {
         return Result{{plain("kappa", {}, kappa_constant(), "Ortega-Cerda-Ounaies-Seip constant")}, {}};
       }},
      {"characteristic",
       [](const RunConfig& c) {
         MultiIndex a = alpha_of(c);
         SequenceSpace s = space_of(c, a.dimension());
         Characteristic ch = c.route == "closed"   ? characteristic_closed(s, a)
                             : c.route == "oracle" ? characteristic_bruteforce(s, a, opt_of(c))
                                                   : characteristic(s, a, opt_of(c));
         return Result{{characteristic_row("characteristic", ch, c)}, {}};
       }},
      {"duality-defect",
       [](const RunConfig& c) {
         MultiIndex a = alpha_of(c);
         SequenceSpace s = space_of(c, a.dimension());
         auto route = c.route == "oracle" ? CharacteristicRoute::Oracle : CharacteristicRoute::Closed;
         return Result{{plain("duality-defect", {{"space", s.describe()}, {"alpha", to_string(a)}, {"route", c.route}},
                              duality_defect(s, a, route, opt_of(c)), "Kothe duality of characteristics")},
                       {}};
       }},
      {"lambda-hat",
       [](const RunConfig& c) {
         IndexSet j = index_set_of(c);
         SequenceSpace s = space_of(c, j.dimension());
         PolyProjResult p = poly_proj_const(s, j, opt_of(c));
         Row r = plain("lambda-hat", space_params(c, j), p.lo, "polynomial projection constant (oracle)");
         if (p.interval) {
           r.lower = p.lo;
           r.upper = p.hi;
         }
         return Result{{r}, {}};
       }},
      {"uncond",
       [](const RunConfig& c) {
         IndexSet j = index_set_of(c);
         SequenceSpace s = space_of(c, j.dimension());
         UncondEstimate u = uncond_basis_lower(s, j, opt_of(c));
         Row r = plain("uncond", space_params(c, j), u.value, "unconditional basis constant (lower estimate)");
         r.lower = u.value;
         r.upper = static_cast<double>(j.size());
         r.extra["lower_bound_only"] = u.lower_bound_only;
         return Result{{r}, {}};
       }},
      {"bohr-km",
       [](const RunConfig& c) {
         IndexSet j = index_set_of(c);
         SequenceSpace s = space_of(c, j.dimension());
         unsigned m = need_u(c.m, "m");
         auto p = space_params(c, j);
         p.emplace_back("m", str(m));
         Row r = plain("bohr-km", p, bohr_radius_homog(s, j, m, opt_of(c)), "K_m vs unconditional constant");
         r.upper = 1.0;
         return Result{{r}, {}};
       }},
      {"bohr",
       [](const RunConfig& c) {
         IndexSet j = index_set_of(c);
         SequenceSpace s = space_of(c, j.dimension());
         unsigned m = c.m ? need_u(c.m, "m") : std::min(8u, j.max_degree());
         return Result{{}, bohr_sandwich(s, j, m, opt_of(c))};
       }},
      {"bohr-witness",
       [](const RunConfig&) {
         Row r = plain("bohr-witness", {}, bohr_witness_estimate(), "Mobius extremal family");
         r.lower = 1.0 / 3 - 1e-3;
         r.upper = 1.0 / 3 + 0.02;
         return Result{{r}, {}};
       }},
      {"catalog",
       [](const RunConfig& c) {
         IndexSet j = index_set_of(c);
         SequenceSpace s = space_of(c, j.dimension());
         std::optional<MCEstimate> mc;
         if (s.family() == SpaceFamily::LInfty && c.samples > 0) mc = torus_exp_sum(j, c.samples, c.seed, c.workers);
         return Result{{}, bounds_catalog(s, j, mc, opt_of(c))};
       }},
      {"torus",
       [](const RunConfig& c) {
         IndexSet j = index_set_of(c);
         auto e = torus_exp_sum(j, c.samples, c.seed, c.workers, c.power);
         auto p = space_params(c, j);
         p.erase(p.begin());
         p.emplace_back("power", std::to_string(c.power));
         Row r = mc_row("torus", p, e, "torus integral of the Dirichlet-type kernel (MC)");
         if (c.power == 1) {
           double top = std::max<double>(1, j.max_degree());
           r.lower = std::sqrt(static_cast<double>(j.size())) / std::pow(std::sqrt(2.0), top);
           r.upper = std::sqrt(static_cast<double>(j.size()));
         }
         return Result{{r}, {}};
       }},
      {"haar-trace",
       [](const RunConfig& c) {
         unsigned n = need_u(c.n, "n");
         auto e = haar_trace_moment(n, c.power, c.samples, c.seed, c.workers);
         return Result{{mc_row("haar-trace", {{"n", str(n)}, {"power", std::to_string(c.power)}}, e,
                               "Haar trace moment (MC)")},
                       {}};
       }},
      {"trace-class",
       [](const RunConfig& c) {
         unsigned n = need_u(c.n, "n");
         auto e = trace_class(n, c.samples, c.seed, c.workers);
         Row r = mc_row("trace-class", {{"n", str(n)}}, e, "trace-class projection constant (MC)");
         r.extra["per_n"] = e.mean / n;
         return Result{{r}, {}};
       }},
      {"dirichlet",
       [](const RunConfig& c) {
         std::uint64_t x = need(c.x, "x");
         std::optional<unsigned> m;
         if (c.m) m = need_u(c.m, "m");
         auto e = dirichlet_projection(x, m, c.samples, c.seed, c.workers);
         std::vector<std::pair<std::string, std::string>> p{{"x", str(x)}};
         if (m) p.emplace_back("m", str(*m));
         Row r = mc_row("dirichlet", p, e, "Dirichlet polynomial projection (MC)");
         r.upper = std::sqrt(static_cast<double>(x));
         return Result{{r}, {}};
       }},
      {"harpo",
       [](const RunConfig& c) {
         std::uint64_t x = need(c.x, "x");
         if (x < 3) throw Error(ErrorCode::InvalidArgument, "harpo ratio needs x >= 3");
         auto e = dirichlet_projection(x, std::nullopt, c.samples, c.seed, c.workers);
         double scale = std::sqrt(static_cast<double>(x)) / std::pow(std::log(std::log(static_cast<double>(x))), 0.25);
         Row r = mc_row("harpo", {{"x", str(x)}}, e, "sqrt(x)/(log log x)^{1/4} shape (ratio only)");
         r.value = e.mean / scale;
         r.std_error = e.std_error / scale;
         r.extra["lambda"] = e.mean;
         return Result{{r}, {}};
       }},
      {"boolean-exact",
       [](const RunConfig& c) {
         SubsetFamily f = family_of(c);
         return Result{{plain("boolean-exact", {{"N", str(f.cube_dimension())}, {"family", f.describe()}},
                              boolean_proj_exact(f, c.workers), "Boolean cube integral (exact)")},
                       {}};
       }},
      {"boolean-mc",
       [](const RunConfig& c) {
         SubsetFamily f = family_of(c);
         auto e = boolean_proj_mc(f, c.samples, c.seed, c.workers);
         return Result{{mc_row("boolean-mc", {{"N", str(f.cube_dimension())}, {"family", f.describe()}}, e,
                               "Boolean cube integral (MC)")},
                       {}};
       }},
      {"boolean-limit",
       [](const RunConfig& c) {
         unsigned d = need_u(c.d, "d");
         return Result{{plain("boolean-limit", {{"d", str(d)}}, boolean_limit(d), "Boolean cube CLT limit E|P_d(Z)|")},
                       {}};
       }},
      {"pd-polynomial",
       [](const RunConfig& c) {
         unsigned d = need_u(c.d, "d");
         UniPoly p = pd_polynomial(d);
         Row r = plain("pd-polynomial", {{"d", str(d)}}, boolean_limit(d), "P_d recursion");
         r.extra["polynomial"] = p.str();
         r.extra["coefficients"] = p.coeffs;
         return Result{{r}, {}};
       }},
      {"cdkn",
       [](const RunConfig& c) {
         unsigned d = need_u(c.d, "d"), k = need_u(c.k, "k"), n = need_u(c.n, "n");
         BigInt v = cdkn_exact(d, k, n);
         Row r = plain("cdkn", {{"d", str(d)}, {"k", str(k)}, {"N", str(n)}}, static_cast<double>(v),
                       "Boolean rewriting coefficient");
         r.extra["exact"] = v.str();
         return Result{{r}, {}};
       }},
      {"index-set",
       [](const RunConfig& c) {
         IndexSet j = index_set_of(c);
         Row r = plain("index-set", {{"index_set", c.index_set}, {"n", str(j.dimension())}},
                       static_cast<double>(j.size()), "index set cardinality");
         r.extra["set"] = to_json(j);
         return Result{{r}, {}};
       }},
      {"reduced-set",
       [](const RunConfig& c) {
         IndexSet j = reduced_set(index_set_of(c));
         Row r = plain("reduced-set", {{"index_set", c.index_set}, {"n", str(j.dimension())}},
                       static_cast<double>(j.size()), "reduced index set");
         r.extra["set"] = to_json(j);
         return Result{{r}, {}};
       }},
      {"prime-map",
       [](const RunConfig& c) {
         std::uint64_t x = need(c.x, "x");
         MultiIndex a = prime_map(x);
         Row r = plain("prime-map", {{"x", str(x)}}, static_cast<double>(a.degree()), "prime exponent map");
         r.extra["alpha"] = a.entries();
         return Result{{r}, {}};
       }},
  };
  return table;
}

std::string param_string(const Row& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ';';
    s += k + "=" + v;
  }
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) {
    if (ch == '"') o += '"';
    o += ch;
  }
  return o + "\"";
}

nlohmann::json row_json(const Row& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  nlohmann::json j = {{"quantity", r.quantity}, {"params", params}, {"value", r.value}, {"provenance", r.provenance}};
  if (r.std_error) {
    j["stderr"] = *r.std_error;
    j["mean"] = r.value;
  }
  if (r.lower) j["lower_bound"] = *r.lower;
  if (r.upper) j["upper_bound"] = *r.upper;
  for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
  return j;
}

std::string opt_num(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

}  // namespace

std::vector<std::string> quantity_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

Result compute(const RunConfig& cfg) {
  auto it = registry().find(cfg.quantity);
  if (it == registry().end()) throw Error(ErrorCode::Parse, "unknown quantity '" + cfg.quantity + "'");
  return it->second(cfg);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_rows(const std::vector<Row>& rows, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Json: {
      if (rows.size() == 1) {
        os << row_json(rows.front()).dump(2) << '\n';
      } else {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : rows) a.push_back(row_json(r));
        os << a.dump(2) << '\n';
      }
      break;
    }
    case Format::Csv:
      os << "quantity,params,value,stderr,lower_bound,upper_bound,provenance\n";
      for (const auto& r : rows) {
        os << csv_escape(r.quantity) << ',' << csv_escape(param_string(r)) << ',' << format_number(r.value) << ','
           << opt_num(r.std_error) << ',' << opt_num(r.lower) << ',' << opt_num(r.upper) << ','
           << csv_escape(r.provenance) << '\n';
      }
      break;
    case Format::Text:
      for (const auto& r : rows) {
        os << r.quantity;
        if (!r.params.empty()) os << " [" << param_string(r) << "]";
        os << " = " << std::setprecision(15) << r.value;
        if (r.std_error) os << " +- " << std::setprecision(4) << *r.std_error;
        if (r.lower || r.upper)
          os << "  bounds [" << (r.lower ? format_number(*r.lower) : "-") << ", "
             << (r.upper ? format_number(*r.upper) : "-") << "]";
        os << "  (" << r.provenance << ")\n";
      }
      break;
  }
  return os.str();
}

std::string render(const Result& r, Format f) {
  if (!r.report) return render_rows(r.rows, f);
  const BoundReport& rep = *r.report;
  switch (f) {
    case Format::Json: return rep.to_json().dump(2) + "\n";
    case Format::Text: return rep.to_text();
    case Format::Csv: {
      std::vector<Row> rows;
      for (const auto& e : rep.entries) {
        Row row;
        row.quantity = e.label;
        row.params = {{"target", e.target}, {"kind", to_string(e.kind)}};
        row.value = e.value;
        if (e.std_error > 0) row.std_error = e.std_error;
        if (e.kind == BoundKind::Lower) row.lower = e.value;
        if (e.kind == BoundKind::Upper) row.upper = e.value;
        row.provenance = e.provenance;
        rows.push_back(std::move(row));
      }
      return render_rows(rows, Format::Csv);
    }
  }
  return {};
}

}  // namespace projlab::cli
