#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "landscape/cli.hpp"

using namespace landscape;
using Json = nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_records(const std::string& text) {
  std::vector<Json> records;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    records.push_back(Json::parse(line));
  }
  return records;
}

const std::vector<std::string> kRank1N5 = {
    "--rho-values", "1,0", "--rho-mults", "1,4",
    "--obs-values", "1,0", "--obs-mults", "1,4"};

std::vector<std::string> with_spec(std::vector<std::string> args,
                                   const std::vector<std::string>& spec) {
  args.insert(args.end(), spec.begin(), spec.end());
  return args;
}

}  // namespace

TEST_CASE("enumerate lists the rank-1 submanifolds with dims and values") {
  const CliRun run = cli(with_spec({"enumerate"}, kRank1N5));
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  REQUIRE(records.size() == 3);  // two submanifolds + summary
  CHECK(records[0]["value"] == 1.0);
  CHECK(records[0]["dim"] == 17);
  CHECK(records[1]["value"] == 0.0);
  CHECK(records[1]["codim"] == 2);
  CHECK(records[1]["dim"] == 23);
  CHECK(records[0]["command"] == "enumerate");
  CHECK(records[0].contains("spec_hash"));
  CHECK(records[0].contains("version"));
  CHECK(records.back()["type"] == "summary");
}

TEST_CASE("enumerate on a nondegenerate landscape lists all permutations") {
  const CliRun run = cli({"enumerate", "--rho-eigenvalues", "0.9,0.6,0.3",
                          "--obs-eigenvalues", "0.8,0.5,0.1"});
  REQUIRE(run.code == 0);
  CHECK(json_records(run.out).size() == 7);  // 3! submanifolds + summary
}

TEST_CASE("malformed specs exit 1 and name the field") {
  const CliRun run = cli({"enumerate", "--rho-values", "1,0", "--rho-mults", "1,1",
                          "--obs-values", "1,0", "--obs-mults", "1,3"});
  CHECK(run.code == 1);
  CHECK(run.err.find("multiplicities sum") != std::string::npos);

  const CliRun missing = cli({"enumerate"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("--spec") != std::string::npos);
}

TEST_CASE("volfrac reports the closed-form rank-1 rows") {
  const CliRun run = cli({"volfrac", "--eps", "0.1", "--rho-values", "1,0",
                          "--rho-mults", "1,2", "--obs-values", "1,0",
                          "--obs-mults", "1,2"});
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  REQUIRE(records.size() == 3);
  // Max submanifold: eps^4 / 4.
  CHECK(records[0]["value"] == 1.0);
  CHECK(records[0]["power"] == 4);
  CHECK(std::abs(records[0]["estimate"].get<double>() - 2.5e-5) <= 1e-17);
  CHECK(std::abs(records[0]["bound"].get<double>() - 2.5e-5) <= 1e-17);
  // Min submanifold: (N-1)/2 eps^2 = 0.01.
  CHECK(records[1]["value"] == 0.0);
  CHECK(records[1]["power"] == 2);
  CHECK(std::abs(records[1]["estimate"].get<double>() - 0.01) <= 1e-14);
}

TEST_CASE("volfrac at N=2 gives two rows of eps^2/2") {
  const CliRun run = cli({"volfrac", "--eps", "0.1", "--rho-values", "1,0",
                          "--rho-mults", "1,1", "--obs-values", "1,0",
                          "--obs-mults", "1,1"});
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  REQUIRE(records.size() == 3);
  CHECK(std::abs(records[0]["estimate"].get<double>() - 0.005) <= 1e-15);
  CHECK(std::abs(records[1]["estimate"].get<double>() - 0.005) <= 1e-15);
}

TEST_CASE("volfrac flags codimension-zero landscapes without failing") {
  const CliRun run = cli({"volfrac", "--eps", "0.1", "--rho-values", "1",
                          "--rho-mults", "3", "--obs-values", "1,0",
                          "--obs-mults", "1,2"});
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  CHECK(records[0]["flag"] == "no-near-critical-estimate");
}

TEST_CASE("spectrum command emits the eigenvalue lines") {
  const CliRun run = cli({"spectrum", "--rho-values", "1,0", "--rho-mults", "1,2",
                          "--obs-values", "1,0", "--obs-mults", "1,2"});
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  REQUIRE(records.size() == 3);
  CHECK(records[0]["spectrum"].size() == 1);
  CHECK(records[0]["spectrum"][0][0] == -1.0);
  CHECK(records[0]["spectrum"][0][1] == 4);  // 2N - 2 at N = 3
  CHECK(records[1]["spectrum"][0][0] == 1.0);
  CHECK(records[1]["spectrum"][0][1] == 2);
}

TEST_CASE("empirical matches the analytic N=2 fraction") {
  const CliRun run = cli({"empirical", "--eps", "0.2", "--trials", "50000",
                          "--seed", "31", "--threads", "2", "--rho-values", "1,0",
                          "--rho-mults", "1,1", "--obs-values", "1,0",
                          "--obs-mults", "1,1"});
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  const double fraction = records[0]["fraction"].get<double>();
  CHECK(std::abs(fraction - 0.040833) <= 0.004);
  CHECK(records[0]["ci_low"].get<double>() <= fraction);
}

TEST_CASE("conjecture campaign exits 0 and reports per-trial records") {
  const CliRun run = cli({"conjecture", "--trials", "20", "--seed", "7",
                          "--dims", "4,6", "--threads", "2"});
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  REQUIRE(records.size() == 21);
  for (size_t i = 0; i + 1 < records.size(); ++i) {
    CHECK(records[i]["pass"] == true);
    CHECK(records[i]["trial"] == i);
    const int n = records[i]["n"].get<int>();
    CHECK((n == 4 || n == 6));
    CHECK(records[i]["coefficients"].is_array());
  }
  CHECK(records.back()["failures"] == 0);
}

TEST_CASE("asymptotics reports zeta and the fitted slope") {
  const CliRun run = cli(with_spec({"asymptotics", "--zmax", "120", "--eps", "0.5",
                                    "--format", "json"},
                                   std::vector<std::string>{
                                       "--rho-values", "1,0", "--rho-mults", "1,1",
                                       "--obs-values", "1,0", "--obs-mults", "1,1"}));
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  const Json summary = records.back();
  REQUIRE(summary["tables"].size() == 2);
  CHECK(summary["tables"][0]["zeta"] == 1);
  const double slope = summary["tables"][0]["g_slope"].get<double>();
  CHECK(std::abs(slope + 2.0) <= 0.25);
  CHECK(summary["tables"][1]["zeta"] == 0);
  CHECK(summary["tables"][1].contains("flag"));
}

TEST_CASE("asymptotics flags families without a tube bound") {
  // A rho that is identically zero keeps the landscape constant at every
  // embedding step; the command reports the table instead of failing.
  const CliRun run = cli({"asymptotics", "--zmax", "6", "--rho-values", "0",
                          "--rho-mults", "2", "--obs-values", "1,0",
                          "--obs-mults", "1,1"});
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  CHECK(records[0]["flag"] == "no-tube-bound");
}

TEST_CASE("curvature reports structural residuals") {
  const CliRun run = cli({"curvature", "--rho-values", "1,0", "--rho-mults", "1,3",
                          "--obs-values", "1,0", "--obs-mults", "1,3",
                          "--seed", "3"});
  REQUIRE(run.code == 0);
  const auto records = json_records(run.out);
  REQUIRE(records.size() >= 3);
  for (const auto& r : records) {
    if (!r.contains("trace_abs")) continue;
    CHECK(r["trace_abs"].get<double>() <= 1e-12);
    CHECK(r["off_block_residual"].get<double>() <= 1e-10);
    CHECK(r["mean_curvature"].get<double>() <= 1e-10);
  }
}

TEST_CASE("byte-identical output across reruns and thread counts") {
  const auto first = cli(with_spec({"enumerate"}, kRank1N5));
  const auto second = cli(with_spec({"enumerate"}, kRank1N5));
  CHECK(first.out == second.out);

  const std::vector<std::string> base = {"conjecture", "--trials", "12", "--seed",
                                         "19", "--dims", "4"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto four = base;
  four.insert(four.end(), {"--threads", "4"});
  CHECK(cli(one).out == cli(four).out);
}

TEST_CASE("csv and table formats carry the fixed column header") {
  const CliRun csv = cli(with_spec({"enumerate", "--format", "csv"}, kRank1N5));
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("command,spec_hash,seed,version,index,value,", 0) == 0);
  const CliRun tab = cli(with_spec({"enumerate", "--format", "table"}, kRank1N5));
  REQUIRE(tab.code == 0);
  CHECK(tab.out.find("command\tspec_hash") == 0);
  CHECK(tab.out.find("# type: \"summary\"") != std::string::npos);
}

TEST_CASE("spec files load in both shapes and errors name fields") {
  {
    std::ofstream f("tmp_spec_grouped.json");
    f << R"({"rho": {"values": [1.0, 0.0], "multiplicities": [1, 2]},
             "obs": {"values": [0.5, 0.25], "multiplicities": [2, 1]}})";
  }
  const CliRun grouped = cli({"enumerate", "--spec", "tmp_spec_grouped.json"});
  CHECK(grouped.code == 0);

  {
    std::ofstream f("tmp_spec_lists.json");
    f << R"({"rho_eigenvalues": [0.2, 0.8, 0.2], "obs_eigenvalues": [1.0, 0.0, 0.0]})";
  }
  const CliRun lists = cli({"enumerate", "--spec", "tmp_spec_lists.json"});
  CHECK(lists.code == 0);

  {
    std::ofstream f("tmp_spec_bad.json");
    f << R"({"rho": {"values": [1.0]}, "obs_eigenvalues": [1.0]})";
  }
  const CliRun bad = cli({"enumerate", "--spec", "tmp_spec_bad.json"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("rho") != std::string::npos);

  const CliRun absent = cli({"enumerate", "--spec", "tmp_no_such_file.json"});
  CHECK(absent.code == 1);
  CHECK(absent.err.find("not readable") != std::string::npos);

  std::remove("tmp_spec_grouped.json");
  std::remove("tmp_spec_lists.json");
  std::remove("tmp_spec_bad.json");
}

TEST_CASE("environment variables override flags") {
  setenv("LANDSCAPE_FORMAT", "csv", 1);
  const CliRun run = cli(with_spec({"enumerate"}, kRank1N5));
  unsetenv("LANDSCAPE_FORMAT");
  REQUIRE(run.code == 0);
  CHECK(run.out.rfind("command,", 0) == 0);
}

TEST_CASE("the table guard exits 1 with a count message") {
  const CliRun run = cli({"enumerate", "--max-tables", "3", "--rho-eigenvalues",
                          "0.9,0.6,0.3", "--obs-eigenvalues", "0.8,0.5,0.1"});
  CHECK(run.code == 1);
  CHECK(run.err.find("max-tables") != std::string::npos);
}

TEST_CASE("unknown flags and missing subcommands fail cleanly") {
  CHECK(cli({"enumerate", "--bogus"}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("verify --quick runs the whole suite through the CLI") {
  const CliRun run = cli({"verify", "--quick", "--threads", "2"});
  CHECK(run.code == 0);
  CHECK(run.out.find("PASS 1 volume-quotient") != std::string::npos);
  CHECK(run.out.find("PASS 9 determinism") != std::string::npos);
  CHECK(run.out.find("FAIL") == std::string::npos);
}
