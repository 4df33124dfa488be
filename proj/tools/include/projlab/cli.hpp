#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "projlab/montecarlo.hpp"
#include "projlab/projbohr.hpp"

namespace projlab::cli {

enum class Command { Compute, Sweep, Verify, Table };
enum class Format { Json, Csv, Text };

struct RunConfig {
  Command command = Command::Compute;
  std::string quantity;
  std::string space = "lr:2";
  std::string index_set;
  std::string family;
  std::string alpha;
  std::string degrees;
  std::string field = "complex";
  std::string route = "auto";
  std::string grid;
  std::string suite = "core";
  std::optional<std::uint64_t> n, m, d, k, x;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  int power = 1;
  double tol = 1e-10;
  bool analytic = false;
  std::uint64_t cap = 10'000'000;
  std::optional<Format> format;
  std::string out;
};

// One output record. CSV columns: quantity, params, value, stderr, lower_bound, upper_bound, provenance.
struct Row {
  std::string quantity;
  std::vector<std::pair<std::string, std::string>> params;
  double value = 0;
  std::optional<double> std_error;
  std::optional<double> lower;
  std::optional<double> upper;
  std::string provenance;
  nlohmann::json extra = nlohmann::json::object();
};

struct Result {
  std::vector<Row> rows;
  std::optional<BoundReport> report;
};

Result compute(const RunConfig& cfg);
std::vector<std::string> quantity_names();

// Formats a double with 17 significant digits (shortest round trip is not needed here).
std::string format_number(double v);
std::string render(const Result& r, Format f);
std::string render_rows(const std::vector<Row>& rows, Format f);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  // Deterministic text: no timings.
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  std::string suite = "core";  // core | quick
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
};

inline constexpr int kCriteria = 12;

CriterionResult run_criterion(int id, const SuiteOptions& opt);
std::vector<CriterionResult> run_suite(const SuiteOptions& opt, std::ostream* progress = nullptr);
std::string render_suite(const std::vector<CriterionResult>& results, Format f);

Result table(const std::string& name, const RunConfig& cfg);

// Exit codes: 0 ok, 1 failed verification or runtime error, 2 parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace projlab::cli
