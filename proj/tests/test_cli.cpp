#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schreier/cli.hpp"
#include "schreier/errors.hpp"

using namespace schreier;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run_cli(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("vector literals") {
  const FinVec v = cli::parse_vector_literal(" 3:1.5, 7 : -2 ");
  CHECK(v[3] == 1.5);
  CHECK(v[7] == -2.0);
  CHECK(v.support().size() == 2);
  CHECK(cli::parse_vector_literal("").is_zero());
  CHECK(cli::parse_vector_literal("2:+1e-3")[2] == 1e-3);
  CHECK(cli::parse_vector_literal("4:0").is_zero());
  CHECK_THROWS_AS(cli::parse_vector_literal("1:1,1:2"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_vector_literal("0:1"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_vector_literal("-1:1"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_vector_literal("1:abc"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_vector_literal("1:inf"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_vector_literal("1"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_vector_literal("1:1,"), PreconditionError);
}

TEST_CASE("set literals") {
  CHECK(cli::parse_set_literal("1, 2,5") == FinSet{1, 2, 5});
  CHECK(cli::parse_set_literal("").empty());
  CHECK_THROWS_AS(cli::parse_set_literal("3,2"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_set_literal("1,1"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_set_literal("1,x"), PreconditionError);
}

TEST_CASE("norm command") {
  auto j = run_json({"norm", "--space", "Sp", "--p", "1", "--vec", "1:1,2:1,3:1"});
  CHECK(j["value"].get<double>() == doctest::Approx(2.0));
  CHECK(j["witness"] == json::array({2, 3}));
  CHECK(j["command"] == "norm");
  CHECK(j["seed"] == 0);
  CHECK(j["tool_version"] == cli::kToolVersion);

  j = run_json({"norm", "--space", "Bp", "--p", "2", "--vec", "1:1,2:1,3:1"});
  CHECK(j["value"].get<double>() == doctest::Approx(std::sqrt(5.0)));
  CHECK(j["witness"] == json::parse("[[1],[2,3]]"));

  const auto text = run_cli({"norm", "--space", "Sp", "--p", "2", "--vec", "5:3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("value: 3") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"norm", "--space", "Bp", "--p", "1", "--vec", "1:1"}).code == 2);
  CHECK(run_cli({"norm", "--space", "Xp", "--p", "2", "--vec", "1:1"}).code == 2);
  CHECK(run_cli({"norm", "--space", "Sp", "--p", "2", "--vec", "1:1,1:2"}).code == 2);
  CHECK(run_cli({"norm", "--space", "Sp", "--p", "2"}).code == 2);
  CHECK(run_cli({"tau", "--set", "3,1"}).code == 2);
  CHECK(run_cli({"glindex", "--M", "1,2,3", "--N", "1,2,3", "--window", "0"}).code == 2);
  CHECK(run_cli({"uncomp-table", "--space", "Sp", "--p", "2", "--kmax", "9"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("tau command") {
  auto j = run_json({"tau", "--set", "1,2,3"});
  CHECK(j["value"] == 2);
  CHECK(j["witness"] == json::parse("[[1],[2,3]]"));
  CHECK(run_json({"tau", "--set", ""})["value"] == 0);
  CHECK(run_json({"tau", "--set", "7"})["value"] == 1);
}

TEST_CASE("glindex command") {
  auto j = run_json({"glindex", "--M", "1,2,3,4,5,6,7,8", "--N", "1,2,3,4,5,6,7,8", "--window", "8"});
  CHECK(j["value"] == 1);
  std::string ones, evens;
  for (int i = 1; i <= 20; ++i) {
    ones += (i > 1 ? "," : "") + std::to_string(i);
    evens += (i > 1 ? "," : "") + std::to_string(2 * i);
  }
  j = run_json({"glindex", "--M", ones, "--N", evens, "--window", "20"});
  CHECK(j["value"] == 2);
  const auto text = run_cli({"glindex", "--M", ones, "--N", evens, "--window", "20"});
  CHECK(text.out.find("lower bound") != std::string::npos);
  CHECK(run_cli({"glindex", "--M", ones, "--N", evens, "--window", "25"}).code == 2);
}

TEST_CASE("uncomp-table command") {
  auto r = run_cli({"uncomp-table", "--space", "Sp", "--p", "2", "--kmax", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row, last;
  std::getline(lines, header);
  CHECK(header == "k,companion,spike,lower_bound");
  int count = 0;
  while (std::getline(lines, row)) {
    last = row;
    ++count;
  }
  CHECK(count == 3);
  CHECK(last.rfind("3,", 0) == 0);
  CHECK(std::stod(last.substr(last.rfind(',') + 1)) == doctest::Approx(2.0 / 3));

  auto j = run_json({"uncomp-table", "--space", "Bp", "--p", "2", "--kmax", "4"});
  CHECK(j["value"].back()["lower_bound"].get<double>() == doctest::Approx(std::pow(2.0, 1.5) / 4));
  j = run_json({"uncomp-table", "--space", "Sp", "--p", "3", "--kmax", "1"});
  CHECK(j["value"].size() == 1);
  CHECK(j["value"][0]["lower_bound"].get<double>() == 1.0);
}

TEST_CASE("json reports re-run bit for bit") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::vector<std::vector<std::string>> commands = {
      {"norm", "--space", "Bp", "--p", "1.7", "--vec", "1:0.1,3:-2.25,4:1e-3,9:0.3333333333333333"},
      {"norm", "--space", "Sp", "--p", "2.5", "--vec", "2:1,5:-1,6:0.75"},
      {"tau", "--set", "1,2,4,5,6,7"},
      {"glindex", "--M", "1,2,3,4,5,6", "--N", "2,4,6,8,10,12", "--window", "6"},
      {"uncomp-table", "--space", "Bp", "--p", "3", "--kmax", "5"},
  };
  int index = 0;
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run_cli(args);
    REQUIRE(r.code == 0);
    const auto path = dir / ("schreier_lab_report_" + std::to_string(index++) + ".json");
    std::ofstream(path) << r.out;
    const auto again = run_cli({"rerun", "--report", path.string()});
    CHECK(again.code == 0);
    CHECK(again.out.rfind("identical", 0) == 0);

    json tampered = json::parse(r.out);
    tampered["witness"] = json::array({99});
    std::ofstream(path) << tampered.dump();
    CHECK(run_cli({"rerun", "--report", path.string()}).code == 1);
    std::filesystem::remove(path);
  }
  CHECK(run_cli({"rerun", "--report", (dir / "schreier_lab_missing.json").string()}).code == 2);
}

TEST_CASE("selftest") {
  auto r = run_cli({"selftest", "--level", "quick", "--criterion", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  criterion 1") != std::string::npos);

  r = run_cli({"selftest", "--level", "quick", "--criterion", "1", "--mutate", "tau1-greedy-short"});
  CHECK(r.code == 1);
  CHECK(r.out.find("certificate:") != std::string::npos);

  r = run_cli({"selftest", "--level", "quick", "--criterion", "2", "--mutate", "sp-drop-heaviest"});
  CHECK(r.code == 1);
  r = run_cli({"selftest", "--level", "quick", "--criterion", "3", "--mutate", "bp-drop-first"});
  CHECK(r.code == 1);
  CHECK(run_cli({"selftest", "--mutate", "no-such-mutation"}).code == 2);
  CHECK(run_cli({"selftest", "--criterion", "10"}).code == 2);
}
