#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hessalg/cli.hpp"

using hessalg::cli::Command;
using hessalg::cli::OutputMode;
using hessalg::cli::RunConfig;
using nlohmann::json;

namespace {

const char* kCusps = "x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x + y + z)";
const char* kLines = "(x^2 - y^2)*(y^2 - z^2)*(x^2 - z^2)";

struct Outcome {
  int code = 0;
  std::string text;
  json parsed;
};

Outcome drive(const RunConfig& config, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  Outcome outcome;
  outcome.code = hessalg::cli::run(config, in, out);
  outcome.text = out.str();
  if (config.output == OutputMode::json) outcome.parsed = json::parse(outcome.text);
  return outcome;
}

} // namespace

TEST_CASE("the Jacobian series report compresses the certified tail") {
  RunConfig config;
  config.command = Command::milnor;
  config.source = kCusps;
  config.output = OutputMode::json;
  const Outcome got = drive(config);
  CHECK(got.code == 0);
  CHECK(got.parsed["coeffs"] == json::array({1, 3, 6, 7}));
  CHECK(got.parsed["stable_from"] == 4);
  CHECK(got.parsed["stable_value"] == 6);
  CHECK(got.parsed["m_max"] == 7);
  CHECK(!got.parsed.contains("k"));
}

TEST_CASE("series reports carry the order in both output modes") {
  RunConfig config;
  config.command = Command::series;
  config.source = kCusps;
  config.k = 2;
  const Outcome text = drive(config);
  CHECK(text.code == 0);
  CHECK(text.text == "k 2: 1 3 6 7 | stable value 3 from degree 4\n");

  config.output = OutputMode::json;
  const Outcome parsed = drive(config);
  CHECK(parsed.parsed["k"] == 2);
  CHECK(parsed.parsed["coeffs"] == json::array({1, 3, 6, 7}));
  CHECK(parsed.parsed["stable_value"] == 3);
}

TEST_CASE("a polynomial can be piped through standard input") {
  RunConfig config;
  config.command = Command::milnor;
  config.source = "-";
  config.output = OutputMode::json;
  const Outcome got = drive(config, "x^4 + y^4 + z^4");
  CHECK(got.code == 0);
  CHECK(got.parsed["stable_value"] == 0);
  CHECK(got.parsed["stable_from"] == 7);
}

TEST_CASE("local invariants resolve catalog names") {
  RunConfig config;
  config.command = Command::chi;
  config.ade = "A2";
  config.output = OutputMode::json;
  const Outcome got = drive(config);
  CHECK(got.code == 0);
  CHECK(got.parsed["n"] == 2);
  CHECK(got.parsed["chi"] == json::array({0, 1, 2}));
  CHECK(got.parsed["tau"] == 2);
  CHECK(got.parsed["mu"].is_null());
  CHECK(got.parsed["smooth"] == false);

  config.with_mu = true;
  CHECK(drive(config).parsed["mu"] == 2);

  config.ade = "Z99";
  const Outcome unknown = drive(config);
  CHECK(unknown.code == 2);
  CHECK(unknown.parsed["error"]["code"] == "BadConfig");
}

TEST_CASE("local invariants accept an explicit germ") {
  RunConfig config;
  config.command = Command::chi;
  config.source = "y1^2 + y2^5";
  config.vars = {"y1", "y2"};
  config.output = OutputMode::json;
  const Outcome got = drive(config);
  CHECK(got.code == 0);
  CHECK(got.parsed["chi"] == json::array({0, 3, 4}));
  CHECK(got.parsed["tau"] == 4);
}

TEST_CASE("threshold reports expose every derived degree") {
  RunConfig config;
  config.command = Command::thresholds;
  config.source = kCusps;
  config.output = OutputMode::json;
  const Outcome got = drive(config);
  CHECK(got.code == 0);
  CHECK(got.parsed["n"] == 2);
  CHECK(got.parsed["d"] == 4);
  CHECK(got.parsed["T"] == 6);
  CHECK(got.parsed["ct"] == 4);
  CHECK(got.parsed["mdr"] == 2);
  CHECK(got.parsed["st"] == 4);
  CHECK(got.parsed["tau_total"] == 6);
  CHECK(got.parsed["tilde_T"] == json::array({8, 10, 12}));
  CHECK(got.parsed["T_k"] == json::array({4, 6, 8}));
  CHECK(got.parsed["hat_T"] == json::array({6, 6, 8}));
  CHECK(got.parsed["smooth"] == false);
  CHECK(got.parsed.contains("note"));

  config.output = OutputMode::text;
  const Outcome text = drive(config);
  CHECK(text.text.find("ct 4, mdr 2, st 4, tau 6") != std::string::npos);

  config.source = "x^6 + y^6 + z^6";
  config.output = OutputMode::json;
  const Outcome smooth = drive(config);
  CHECK(smooth.parsed["smooth"] == true);
  CHECK(smooth.parsed["ct"].is_null());
  CHECK(smooth.parsed["T_k"].is_null());
  CHECK(!smooth.parsed.contains("note"));
}

TEST_CASE("the quasihomogeneous point count reports its ingredients") {
  RunConfig config;
  config.command = Command::count_wh;
  config.source = kLines;
  config.output = OutputMode::json;
  const Outcome got = drive(config);
  CHECK(got.code == 0);
  CHECK(got.parsed["count"] == 7);
  CHECK(got.parsed["milnor_dim"] == 19);
  CHECK(got.parsed["hn_dim"] == 12);
  CHECK(got.parsed["m_eval"] == 20);
  CHECK(got.parsed["smooth"] == false);

  config.m_eval = 10;
  CHECK(drive(config).parsed["count"] == 7);
}

TEST_CASE("reconciliation reports per-order rows and an overall verdict") {
  RunConfig config;
  config.command = Command::reconcile;
  config.source = kCusps;
  config.germ_sources = {"y1^2 + y2^3"};
  config.germ_mults = {3};
  config.output = OutputMode::json;
  const Outcome got = drive(config);
  CHECK(got.code == 0);
  CHECK(got.parsed["ok"] == true);
  REQUIRE(got.parsed["rows"].size() == 3);
  CHECK(got.parsed["rows"][0]["global_stable"] == 0);
  CHECK(got.parsed["rows"][1]["global_stable"] == 3);
  CHECK(got.parsed["rows"][2]["global_stable"] == 6);
  CHECK(got.parsed["rows"][2]["local_sum"] == 6);

  config.germ_mults = {3, 1};
  const Outcome mismatch = drive(config);
  CHECK(mismatch.code == 2);
  CHECK(mismatch.parsed["error"]["code"] == "BadConfig");
}

TEST_CASE("strata runs read assignments from a csv stream") {
  RunConfig config;
  config.command = Command::strata;
  config.source = "x^4 + y^4 + z^4 + a*x^2*y^2";
  config.params = {"a"};
  config.ks = {1, 2, 3};
  config.compare_ks = {3};
  config.assignments_path = "-";
  config.output = OutputMode::dot;
  const Outcome got = drive(config, "# tuples, one per line\n0\n\n2\n");
  CHECK(got.code == 0);
  CHECK(got.text.rfind("digraph", 0) == 0);
  CHECK(got.text.find("S2 -> S1") != std::string::npos);

  config.output = OutputMode::json;
  const Outcome parsed = drive(config, "0\n2\n");
  CHECK(parsed.parsed["strata"] == json::array({json::array({0}), json::array({1})}));
  CHECK(parsed.parsed["covers"] == json::array({json::array({1, 0})}));
  CHECK(parsed.parsed["samples"][1]["failed"] == false);
  CHECK(parsed.parsed["samples"][0]["series"].contains("3"));
  CHECK(parsed.parsed["dot"].get<std::string>().find("digraph") != std::string::npos);
}

TEST_CASE("strata runs read assignments from a csv file and sample generics") {
  const std::string path = "cli_strata_tuples.csv";
  {
    std::ofstream file(path);
    file << "# one parameter per column\n-2\n";
  }
  RunConfig config;
  config.command = Command::strata;
  config.source = "x^4 + y^4 + z^4 + a*x^2*y^2";
  config.params = {"a"};
  config.ks = {3};
  config.assignments_path = path;
  config.generic_count = 2;
  config.seed = 11;
  const Outcome got = drive(config);
  std::remove(path.c_str());
  CHECK(got.code == 0);
  CHECK(got.text.find("S1 (1 sample)") != std::string::npos);
  CHECK(got.text.find("S2 (2 samples)") != std::string::npos);
  CHECK(got.text.find("S1 > S2") != std::string::npos);
  CHECK(got.text.find("note:") != std::string::npos);

  config.assignments_path = "missing_tuples.csv";
  config.generic_count = 0;
  CHECK(drive(config).code == 2);
}

TEST_CASE("fixture subsets can be replayed by prefix") {
  RunConfig config;
  config.command = Command::check;
  config.only_prefix = "excusp.";
  const Outcome got = drive(config);
  CHECK(got.code == 0);
  CHECK(got.text.find("[PASS] excusp.M:") != std::string::npos);
  CHECK(got.text.find("all fixtures pass") != std::string::npos);
  CHECK(got.text.find("[FAIL]") == std::string::npos);

  config.output = OutputMode::json;
  const Outcome parsed = drive(config);
  CHECK(parsed.parsed["all_pass"] == true);
  for (const auto& row : parsed.parsed["results"])
    CHECK(row["id"].get<std::string>().rfind("excusp.", 0) == 0);

  config.only_prefix = "nosuchfixture.";
  const Outcome missing = drive(config);
  CHECK(missing.code == 1);
  CHECK(missing.parsed["error"]["code"] == "CorruptFixture");
}

TEST_CASE("input problems map to distinct exit codes") {
  RunConfig config;
  config.command = Command::milnor;
  config.source = "x + w";
  config.output = OutputMode::json;
  const Outcome unknown = drive(config);
  CHECK(unknown.code == 1);
  CHECK(unknown.parsed["error"]["code"] == "UnknownIdentifier");
  CHECK(unknown.parsed["error"]["position"] == 4);

  config.source = "";
  const Outcome empty = drive(config);
  CHECK(empty.code == 2);
  CHECK(empty.parsed["error"]["code"] == "BadConfig");
  CHECK(empty.parsed["error"]["position"].is_null());

  config.source = "x + ";
  config.output = OutputMode::text;
  const Outcome truncated = drive(config);
  CHECK(truncated.code == 1);
  CHECK(truncated.text.rfind("error [SyntaxError]:", 0) == 0);
  CHECK(truncated.text.find("at position") != std::string::npos);
}
