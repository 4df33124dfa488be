#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "projlab/cli.hpp"
#include "projlab/error.hpp"

namespace projlab::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat key=value file; blank lines and '#' comments are skipped.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    if (key.empty() || key == "config") throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": bad key");
    if (key == "analytic") {
      if (value == "1" || value == "true") args.push_back("--analytic");
      continue;
    }
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

struct Numbers {
  std::uint64_t n = 0, m = 0, d = 0, k = 0, x = 0;
};

void add_common(CLI::App* app, RunConfig& cfg, Numbers& nums, std::string& format, std::string& config_path) {
  app->add_option("--quantity,-q", cfg.quantity, "quantity or table name");
  app->add_option("--space", cfg.space, "space descriptor: lr:2, linf, lorentz:2,1, nakano:1.5,2,3, mixed:1,2,4x3");
  app->add_option("--index-set", cfg.index_set, "full:m, upto:m, tetra:m, tetra-upto:m, primes:x[,m] or JSON");
  app->add_option("--family", cfg.family, "Boolean family: homog:d, upto:d or JSON bitmasks");
  app->add_option("--alpha", cfg.alpha, "multi-index, comma separated");
  app->add_option("--degrees", cfg.degrees, "comma separated degrees");
  app->add_option("--field", cfg.field, "real or complex");
  app->add_option("--route", cfg.route, "auto, closed or oracle");
  app->add_option("--grid", cfg.grid, "sweep grid key=v1,v2,... or key=a:b[:step]");
  app->add_option("--n", nums.n, "dimension / number of variables / cube dimension");
  app->add_option("--m", nums.m, "degree");
  app->add_option("--d", nums.d, "degree (Boolean)");
  app->add_option("--k", nums.k, "secondary index");
  app->add_option("--x", nums.x, "Dirichlet length");
  app->add_option("--samples", cfg.samples, "Monte Carlo samples");
  app->add_option("--seed", cfg.seed, "RNG seed");
  app->add_option("--workers", cfg.workers, "worker threads")->envname("PROJLAB_WORKERS")->check(CLI::PositiveNumber);
  app->add_option("--power", cfg.power, "moment power");
  app->add_option("--tol", cfg.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  app->add_option("--cap", cfg.cap, "index-set enumeration cap");
  app->add_flag("--analytic", cfg.analytic, "analytic Dirichlet kernel");
  app->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--out,-o", cfg.out, "output path (default stdout)");
  app->add_option("--config", config_path, "key=value file; command-line flags override it");
  app->add_option("--suite", cfg.suite, "verification suite: core or quick");
}

void copy_numbers(CLI::App* app, const Numbers& nums, RunConfig& cfg) {
  auto set = [&](const char* name, std::uint64_t v, std::optional<std::uint64_t>& dst) {
    if (app->get_option(name)->count() > 0) dst = v;
  };
  set("--n", nums.n, cfg.n);
  set("--m", nums.m, cfg.m);
  set("--d", nums.d, cfg.d);
  set("--k", nums.k, cfg.k);
  set("--x", nums.x, cfg.x);
}

std::vector<std::uint64_t> parse_grid_values(const std::string& text) {
  std::vector<std::uint64_t> out;
  auto colon = text.find(':');
  try {
    if (colon != std::string::npos) {
      std::vector<std::uint64_t> parts;
      std::stringstream ss(text);
      std::string tok;
      while (std::getline(ss, tok, ':')) parts.push_back(std::stoull(tok));
      if (parts.size() < 2 || parts.size() > 3) throw Error(ErrorCode::Parse, "range must be a:b or a:b:step");
      std::uint64_t step = parts.size() == 3 ? parts[2] : 1;
      if (step == 0 || parts[1] < parts[0]) throw Error(ErrorCode::Parse, "empty range");
      for (std::uint64_t v = parts[0]; v <= parts[1]; v += step) out.push_back(v);
    } else {
      std::stringstream ss(text);
      std::string tok;
      while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "bad grid values '" + text + "'");
  }
  if (out.empty() || out.size() > 10000) throw Error(ErrorCode::Parse, "grid must have 1..10000 values");
  return out;
}

Result sweep(const RunConfig& cfg) {
  auto eq = cfg.grid.find('=');
  if (eq == std::string::npos) throw Error(ErrorCode::Parse, "--grid must look like key=values");
  std::string key = cfg.grid.substr(0, eq);
  auto values = parse_grid_values(cfg.grid.substr(eq + 1));
  Result out;
  for (std::uint64_t v : values) {
    RunConfig c = cfg;
    if (key == "n") c.n = v;
    else if (key == "m") c.m = v;
    else if (key == "d") c.d = v;
    else if (key == "k") c.k = v;
    else if (key == "x") c.x = v;
    else if (key == "samples") c.samples = v;
    else throw Error(ErrorCode::Parse, "grid key must be one of n, m, d, k, x, samples");
    Result r = compute(c);
    if (r.report) {
      for (const auto& e : r.report->entries) {
        Row row;
        row.quantity = e.label;
        row.params = {{key, std::to_string(v)}, {"target", e.target}, {"kind", to_string(e.kind)}};
        row.value = e.value;
        if (e.std_error > 0) row.std_error = e.std_error;
        if (e.kind == BoundKind::Lower) row.lower = e.value;
        if (e.kind == BoundKind::Upper) row.upper = e.value;
        row.provenance = e.provenance;
        out.rows.push_back(std::move(row));
      }
    }
    for (auto& row : r.rows) out.rows.push_back(std::move(row));
  }
  return out;
}

Format parse_format(const std::string& s, Format fallback) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  return fallback;
}

void emit(const std::string& data, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    out << data;
    out.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + cfg.out + "'");
  f << data;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);

  // The config file is spliced in right after the subcommand so later flags win.
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }

  RunConfig cfg;
  Numbers nums;
  std::string format;
  std::string ignored_config;
  CLI::App app{"projlab: projection constants, polynomial projection constants and Bohr radii"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  CLI::App* compute_cmd = app.add_subcommand("compute", "compute one quantity");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep a quantity over a parameter grid (CSV by default)");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  CLI::App* table_cmd = app.add_subcommand("table", "numeric tables: boolean-limits, grunbaum, lebesgue, rw, harpo");
  for (CLI::App* sub : {compute_cmd, sweep_cmd, verify_cmd, table_cmd}) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    add_common(sub, cfg, nums, format, ignored_config);
  }
  compute_cmd->footer("quantities: " + [] {
    std::string s;
    for (const auto& q : quantity_names()) s += (s.empty() ? "" : ", ") + q;
    return s;
  }());

  try {
    // CLI11 drops an invalid environment value silently; refuse it instead.
    if (const char* w = std::getenv("PROJLAB_WORKERS")) {
      char* end = nullptr;
      long v = std::strtol(w, &end, 10);
      if (*w == '\0' || *end != '\0' || v <= 0) throw Error(ErrorCode::Parse, "PROJLAB_WORKERS must be a positive integer");
    }
    if (!config_path.empty()) {
      auto extra = read_config(config_path);
      std::size_t pos = 0;
      while (pos < args.size() && !args[pos].empty() && args[pos][0] == '-') ++pos;
      if (pos < args.size()) args.insert(args.begin() + static_cast<std::ptrdiff_t>(pos) + 1, extra.begin(), extra.end());
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App* used = nullptr;
  for (CLI::App* sub : {compute_cmd, sweep_cmd, verify_cmd, table_cmd})
    if (sub->parsed()) used = sub;
  copy_numbers(used, nums, cfg);
  cfg.command = used == compute_cmd ? Command::Compute
                : used == sweep_cmd ? Command::Sweep
                : used == verify_cmd ? Command::Verify
                                     : Command::Table;

  try {
    switch (cfg.command) {
      case Command::Compute: {
        if (cfg.quantity.empty()) throw Error(ErrorCode::InvalidArgument, "missing --quantity");
        Format f = parse_format(format, Format::Json);
        emit(render(compute(cfg), f), cfg, out);
        return 0;
      }
      case Command::Sweep: {
        if (cfg.quantity.empty()) throw Error(ErrorCode::InvalidArgument, "missing --quantity");
        if (cfg.grid.empty()) throw Error(ErrorCode::InvalidArgument, "missing --grid");
        Format f = parse_format(format, Format::Csv);
        emit(render(sweep(cfg), f), cfg, out);
        return 0;
      }
      case Command::Table: {
        if (cfg.quantity.empty()) throw Error(ErrorCode::InvalidArgument, "missing --quantity (table name)");
        Format f = parse_format(format, Format::Csv);
        emit(render(table(cfg.quantity, cfg), f), cfg, out);
        return 0;
      }
      case Command::Verify: {
        SuiteOptions opt{cfg.suite, cfg.seed, cfg.workers};
        auto results = run_suite(opt, &err);
        Format f = parse_format(format, Format::Text);
        emit(render_suite(results, f), cfg, out);
        for (const auto& r : results)
          if (!r.pass) return 1;
        return 0;
      }
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == ErrorCode::Parse || e.code() == ErrorCode::InvalidArgument ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace projlab::cli
