#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "projlab/cli.hpp"

using namespace projlab::cli;

namespace {

struct Outcome {
  int rc;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "projlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int rc = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, ComputeJson) {
  Outcome r = invoke({"compute", "--quantity", "rw", "--n", "2", "--m", "2"});
  ASSERT_EQ(r.rc, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["quantity"], "rw");
  EXPECT_DOUBLE_EQ(j["value"].get<double>(), 1.5);
  EXPECT_EQ(j["params"]["n"], "2");
}

TEST(Cli, BooleanLimit) {
  Outcome r = invoke({"compute", "--quantity", "boolean-limit", "--d", "2"});
  ASSERT_EQ(r.rc, 0) << r.err;
  double v = nlohmann::json::parse(r.out)["value"].get<double>();
  EXPECT_NEAR(v, std::sqrt(2 / (std::numbers::pi * std::numbers::e)), 1e-12);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).rc, 2);
  EXPECT_EQ(invoke({"compute", "--quantity", "nonsense"}).rc, 2);
  EXPECT_EQ(invoke({"compute", "--quantity", "rw", "--n", "two"}).rc, 2);
  EXPECT_EQ(invoke({"compute", "--quantity", "characteristic", "--space", "lq:2", "--alpha", "1,1"}).rc, 2);
  // Runtime refusal: the cube is too large for exact enumeration.
  Outcome big = invoke({"compute", "--quantity", "boolean-exact", "--family", "homog:1", "--n", "30"});
  EXPECT_EQ(big.rc, 1);
  EXPECT_FALSE(big.err.empty());
}

TEST(Cli, ConfigFileIsOverriddenByFlags) {
  auto path = std::filesystem::temp_directory_path() / "projlab_test_cli.cfg";
  {
    std::ofstream f(path);
    f << "# comment\nn = 3\nm = 2\n";
  }
  Outcome a = invoke({"compute", "--quantity", "rw", "--config", path.string()});
  ASSERT_EQ(a.rc, 0) << a.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(a.out)["value"].get<double>(), 2.0);
  Outcome b = invoke({"compute", "--quantity", "rw", "--config", path.string(), "--n", "2"});
  ASSERT_EQ(b.rc, 0) << b.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(b.out)["value"].get<double>(), 1.5);
  EXPECT_EQ(invoke({"compute", "--quantity", "rw", "--config", "/nonexistent/projlab.cfg"}).rc, 2);
  std::filesystem::remove(path);
}

TEST(Cli, CsvAndTables) {
  const std::string header = "quantity,params,value,stderr,lower_bound,upper_bound,provenance\n";
  Outcome c = invoke({"compute", "--quantity", "rw", "--n", "2", "--m", "2", "--format", "csv"});
  ASSERT_EQ(c.rc, 0);
  EXPECT_EQ(c.out.substr(0, header.size()), header);
  EXPECT_EQ(lines(c.out), 2u);
  for (std::string t : {"boolean-limits", "grunbaum", "lebesgue", "rw", "harpo"}) {
    Outcome r = invoke({"table", "--quantity", t, "--format", "csv"});
    ASSERT_EQ(r.rc, 0) << t << r.err;
    EXPECT_EQ(r.out.substr(0, header.size()), header) << t;
    EXPECT_GT(lines(r.out), 2u) << t;
  }
  Outcome s = invoke({"sweep", "--quantity", "rw", "--n", "2", "--grid", "m=1:3", "--format", "csv"});
  ASSERT_EQ(s.rc, 0) << s.err;
  EXPECT_EQ(lines(s.out), 4u);
  EXPECT_NE(s.out.find("rw,n=2;m=3,1.6"), std::string::npos);
}

TEST(Cli, IdenticalArgvGivesIdenticalBytes) {
  std::vector<std::string> args{"compute", "--quantity", "torus",  "--index-set", "full:2", "--n",
                                "2",       "--samples",  "20000", "--seed",      "9",      "--workers", "2"};
  Outcome a = invoke(args), b = invoke(args);
  ASSERT_EQ(a.rc, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  args[10] = "10";
  EXPECT_NE(invoke(args).out, a.out);
}

TEST(Cli, WorkersFromEnvironment) {
  ::setenv("PROJLAB_WORKERS", "3", 1);
  Outcome a = invoke({"compute", "--quantity", "rw", "--n", "2", "--m", "2"});
  ::setenv("PROJLAB_WORKERS", "0", 1);
  Outcome bad = invoke({"compute", "--quantity", "rw", "--n", "2", "--m", "2"});
  ::unsetenv("PROJLAB_WORKERS");
  EXPECT_EQ(a.rc, 0);
  EXPECT_EQ(bad.rc, 2);
}
