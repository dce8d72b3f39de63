#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsched/cli.hpp"
#include "qsched/errors.hpp"
#include "support.hpp"

using namespace qsched;
using namespace qsched::cli;
using qsched::test::data_path;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qsched_test_" + name);
}

std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("config parsing") {
  const nsp::Instance inst = load_config(data_path("model1_k4.json"));
  CHECK(inst.nurses == 13);
  CHECK(inst.graveyard_size == 3);
  CHECK(inst.night_per_day == 2);
  CHECK(inst.day_per_day == 3);
  CHECK(inst.first_weekday == nsp::Weekday::Thu);
  CHECK(inst.weights.t3 == 1.0);
  CHECK_FALSE(inst.weights.workload);
  CHECK_FALSE(inst.workload_target);

  const nsp::Instance five = load_config(data_path("five_nurse.json"));
  CHECK(five.workload_target == 3);
  CHECK(five.weights.t2 == 0.0);
}

TEST_CASE("config errors name the key") {
  const std::string base = R"("nurses":2,"max_consecutive":2,"days":4,"first_weekday":"Mon")";
  CHECK(config_error("{" + base + R"(,"colour":1})").find("colour") != std::string::npos);
  CHECK(config_error("{" + base + R"(,"weights":{"t9":1}})").find("weights.t9") != std::string::npos);
  CHECK(config_error("{" + base + R"(,"graveyard":{"size":2}})").find("graveyard.per_day") !=
        std::string::npos);
  CHECK(config_error(R"({"nurses":2,"max_consecutive":2,"days":4})").find("first_weekday") !=
        std::string::npos);
  CHECK(config_error(R"({"nurses":"two","max_consecutive":2,"days":4,"first_weekday":"Mon"})")
            .find("nurses") != std::string::npos);
  CHECK(config_error(R"({"nurses":2,"max_consecutive":2,"days":4,"first_weekday":"Funday"})")
            .find("first_weekday") != std::string::npos);
  CHECK_FALSE(config_error("{not json").empty());
  CHECK_FALSE(config_error("{" + base + R"(,"graveyard":{"size":2,"per_day":2}})").empty());
  CHECK_THROWS_AS(load_config(data_path("missing.json")), ConfigError);
}

TEST_CASE("CSV round trip") {
  const nsp::Schedule s = parse_csv(slurp(data_path("circulant5.csv")));
  CHECK(s.nurses() == 5);
  CHECK(s.days() == 5);
  CHECK(render_csv(s) == slurp(data_path("circulant5.csv")));
  CHECK(parse_csv(render_csv(s)) == s);
  CHECK(parse_csv("1, 0\r\n0 ,1\n\n") == nsp::Schedule(2, 2, {1, 0, 0, 1}));
  CHECK_THROWS_AS(parse_csv("1,0\n1\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_csv("1,2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_csv(""), InvalidArgument);
}

TEST_CASE("ASCII table layout") {
  const nsp::Instance inst = load_config(data_path("model1_k4.json"));
  nsp::Schedule s(13, 30);
  s.set(0, 0, true);
  s.set(12, 29, true);
  const std::string text = render_ascii(s, inst);
  CHECK(text.find("U1 graveyard shift") != std::string::npos);
  CHECK(text.find("U2 night shift") != std::string::npos);
  CHECK(text.find("U3 day shift") != std::string::npos);
  CHECK(text.find("P13") != std::string::npos);
  // Two header rows (days 1-15 and 16-30) per group.
  std::size_t headers = 0;
  for (std::size_t at = text.find("Date"); at != std::string::npos; at = text.find("Date", at + 1))
    ++headers;
  CHECK(headers == 6);
  std::size_t marks = 0;
  for (char c : text) marks += c == 'X';
  CHECK(marks == 2);
}

TEST_CASE("check subcommand exit codes") {
  std::ostringstream out, err;
  CHECK(run_check(data_path("circulant5.csv"), data_path("five_nurse.json"), false, out, err) ==
        kExitFeasible);
  CHECK(out.str().find("feasible") != std::string::npos);

  out.str("");
  CHECK(run_check(data_path("two_graveyard_isolated.csv"), data_path("two_graveyard.json"), false,
                  out, err) == kExitInfeasible);
  CHECK(out.str().find("rule 4: VIOLATED") != std::string::npos);
  CHECK(out.str().find("nurse 2, day 3") != std::string::npos);

  out.str("");
  err.str("");
  CHECK(run_check(data_path("eight_columns.csv"), data_path("model1_k4.json"), false, out, err) ==
        kExitError);
  CHECK_FALSE(err.str().empty());

  CHECK(run_check(data_path("circulant5.csv"), data_path("missing.json"), false, out, err) ==
        kExitError);
}

TEST_CASE("check with the enumeration oracle") {
  std::ostringstream out, err;
  CHECK(run_check(data_path("two_graveyard_ok.csv"), data_path("two_graveyard.json"), true, out,
                  err) == kExitFeasible);
  CHECK(out.str().find("oracle: 2 feasible schedules, this one is among them") != std::string::npos);
}

TEST_CASE("QUBO export is deterministic") {
  const auto a = temp_file("a.qubo");
  const auto b = temp_file("b.qubo");
  std::ostringstream out, err;
  REQUIRE(run_export_qubo(data_path("five_nurse.json"), a, out, err) == kExitFeasible);
  REQUIRE(run_export_qubo(data_path("five_nurse.json"), b, out, err) == kExitFeasible);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("p qubo 25 ", 0) == 0);
  CHECK(text.find("\noffset ") != std::string::npos);

  REQUIRE(run_export_qubo(data_path("model1_soft.json"), a, out, err) == kExitFeasible);
  CHECK(slurp(a).find(" 88\n") != std::string::npos);

  CHECK(run_export_qubo(data_path("five_nurse.json"), "/nonexistent-dir/x.qubo", out, err) ==
        kExitError);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("solve on the five-nurse config") {
  SolveOptions opts;
  std::ostringstream out, err;
  CHECK(run_solve(data_path("five_nurse.json"), opts, out, err) == kExitFeasible);
  CHECK(out.str().find("U1 graveyard shift") != std::string::npos);
  CHECK(out.str().find("residual T1: 0") != std::string::npos);
  CHECK(out.str().find("residual workload: 0") != std::string::npos);

  std::ostringstream again;
  run_solve(data_path("five_nurse.json"), opts, again, err);
  auto table = [](const std::string& s) { return s.substr(0, s.find("seconds:")); };
  CHECK(table(again.str()) == table(out.str()));
}

TEST_CASE("solve output formats") {
  SolveOptions opts;
  opts.reads = 2;
  opts.sweeps = 500;

  opts.format = Format::json;
  std::ostringstream out, err;
  run_solve(data_path("five_nurse.json"), opts, out, err);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["schedule"].size() == 5);
  CHECK(doc["schedule"][0].size() == 5);
  CHECK(doc.contains("energy"));
  CHECK(doc["residuals"].contains("T1"));
  CHECK(doc["rules"].contains("feasible"));
  CHECK(doc["params"]["reads"] == 2);

  opts.format = Format::csv;
  std::ostringstream csv, summary;
  run_solve(data_path("five_nurse.json"), opts, csv, summary);
  CHECK(parse_csv(csv.str()).nurses() == 5);
  CHECK(summary.str().find("energy:") != std::string::npos);

  const auto path = temp_file("sched.csv");
  opts.out = path;
  std::ostringstream quiet;
  run_solve(data_path("five_nurse.json"), opts, quiet, err);
  CHECK(parse_csv(slurp(path)).days() == 5);
  CHECK(quiet.str().find("energy:") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("solve reports configuration errors") {
  std::ostringstream out, err;
  CHECK(run_solve(data_path("missing.json"), SolveOptions{}, out, err) == kExitError);
  CHECK(err.str().find("error:") != std::string::npos);
  SolveOptions zero;
  zero.reads = 0;
  err.str("");
  CHECK(run_solve(data_path("five_nurse.json"), zero, out, err) == kExitError);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::json);
  CHECK_FALSE(parse_format("xml"));
}
