#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "semibrick/cli.hpp"

using namespace semibrick;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "semibrick-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("verify-bijection report") {
  const auto r = run({"verify-bijection", "--preset", "a2", "--p", "2", "--bound", "2,2", "--structure", "standard"});
  REQUIRE(r.code == cli::kPass);
  const auto j = r.report();
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["tool"]["version"] == kToolVersion);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["universe"]["size"] == 14);
  CHECK(j["result"]["semibrick_count"] == 5);
  CHECK(j["result"]["wide_count"] == 5);
  CHECK(j["config"]["bound"]["1"] == 2);
  CHECK(j.contains("truncation"));
  CHECK(r.err.find("verdict PASS") != std::string::npos);
}

TEST_CASE("verify-corollary under the split structure") {
  const auto r = run({"verify-corollary", "--preset", "a2", "--p", "2", "--structure", "split"});
  REQUIRE(r.code == cli::kPass);
  const auto res = r.report()["result"];
  CHECK(res["abelian_with_standard"] == false);
  CHECK(res["simples_form_semibrick"] == false);
  const auto& w = res["nonzero_non_iso_between_simples"];
  REQUIRE(w.is_object());
  const auto ids = fixtures::a2_ids();
  CHECK(w["source"] == ids.s2.value);
  CHECK(w["target"] == ids.p1.value);
}

TEST_CASE("other subcommands") {
  const auto sb = run({"semibricks", "--preset", "a1", "--p", "2", "--bound", "3"});
  CHECK(sb.code == cli::kPass);
  CHECK(sb.report()["result"]["count"] == 2);

  const auto ids = fixtures::a2_ids();
  const auto f = run({"filt", "--preset", "a2", "--bricks", std::to_string(ids.s1.value) + "," + std::to_string(ids.s2.value),
                      "--structure", "split"});
  CHECK(f.code == cli::kPass);
  CHECK(f.report()["result"]["closure"].size() == 9);

  const auto w = run({"wide-check", "--preset", "a2", "--classes", "0," + std::to_string(ids.s1.value)});
  CHECK(w.code == cli::kFail);
  CHECK(w.report()["verdict"] == "FAIL");

  const auto all = run({"wide-check", "--preset", "a2", "--classes", "0,1,2,3,4,5,6,7,8,9,10,11,12,13"});
  CHECK(all.code == cli::kPass);

  const auto ex = run({"split-example", "--preset", "a2"});
  CHECK(ex.code == cli::kPass);

  const auto uni = run({"universe", "--preset", "a2"});
  CHECK(uni.code == cli::kPass);
  CHECK(uni.report()["result"]["classes"].size() == 14);

  const auto custom = run({"universe", "--vertices", "x,y", "--arrows", "u:x:y", "--bound", "1"});
  CHECK(custom.code == cli::kPass);
  CHECK(custom.report()["universe"]["size"] == 5);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"universe", "--preset", "a2", "--p", "4"}).code == cli::kUsage);
  CHECK(run({"universe", "--preset", "d4"}).code == cli::kUsage);
  CHECK(run({"universe", "--preset", "a2", "--bound", "1,2,3"}).code == cli::kUsage);
  CHECK(run({"universe", "--preset", "a2", "--bound", "-1"}).code == cli::kUsage);
  CHECK(run({"universe", "--structure", "exotic"}).code == cli::kUsage);
  CHECK(run({"universe", "--vertices", "1,2", "--arrows", "a:1:2,b:2:1"}).code == cli::kUsage);
  CHECK(run({"filt", "--preset", "a2"}).code == cli::kUsage);
  CHECK(run({"filt", "--preset", "a2", "--bricks", "99"}).code == cli::kUsage);
  CHECK(run({"nonsense"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"universe", "--config", "/nonexistent/config.json"}).code == cli::kUsage);
}

TEST_CASE("budget errors exit with 3") {
  CHECK(run({"universe", "--preset", "a3", "--bound", "3", "--budget", "10"}).code == cli::kBudget);
  CHECK(run({"semibricks", "--preset", "a2", "--ceiling", "1"}).code == cli::kBudget);
  CHECK(run({"verify-bijection", "--preset", "a2", "--node-budget", "2", "--search", "sum-closed"}).code == cli::kBudget);
}

TEST_CASE("config file, flags and environment") {
  const auto path = temp_file("semibrick_cli_test.json", R"({"preset": "a1", "bound": 2, "structure": "split"})");
  const auto from_file = run({"verify-bijection", "--config", path});
  REQUIRE(from_file.code == cli::kPass);
  CHECK(from_file.report()["config"]["preset"] == "a1");
  CHECK(from_file.report()["config"]["structure"] == "split");
  CHECK(from_file.report()["universe"]["size"] == 3);

  const auto flag_wins = run({"verify-bijection", "--config", path, "--bound", "3"});
  CHECK(flag_wins.report()["universe"]["size"] == 4);

  const auto bad = temp_file("semibrick_cli_bad.json", "{not json");
  CHECK(run({"universe", "--config", bad}).code == cli::kUsage);

  ::setenv("SEMIBRICK_LAB_CEILING", "1", 1);
  CHECK(run({"semibricks", "--preset", "a2"}).code == cli::kBudget);
  CHECK(run({"semibricks", "--preset", "a2", "--ceiling", "65536"}).code == cli::kPass);
  ::setenv("SEMIBRICK_LAB_CEILING", "abc", 1);
  CHECK(run({"semibricks", "--preset", "a2"}).code == cli::kUsage);
  ::unsetenv("SEMIBRICK_LAB_CEILING");
}

TEST_CASE("reports do not depend on the worker count") {
  const auto one = run({"verify-bijection", "--preset", "a2", "--workers", "1"});
  const auto four = run({"verify-bijection", "--preset", "a2", "--workers", "4"});
  const auto again = run({"verify-bijection", "--preset", "a2", "--workers", "4"});
  CHECK(one.out == four.out);
  CHECK(four.out == again.out);
}

TEST_CASE("report written to a file") {
  const std::string path = temp_file("semibrick_cli_report.json", "");
  const auto r = run({"semibricks", "--preset", "a2", "--out", path});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["result"]["count"] == 5);
}

TEST_CASE("serialized forms round-trip") {
  const auto& u = *fixtures::a2_universe();
  for (auto id : u.ids()) {
    const auto j = rep_to_json(u.rep(id));
    const auto back = rep_from_json(j, u.quiver_ptr(), u.prime());
    CHECK(back == u.rep(id));
  }
  const fixtures::A2 a;
  const auto j = mor_to_json(a.s2_to_p1());
  CHECK(j["2"] == Json::parse("[[1]]"));
  CHECK(class_set_from_json(class_set_to_json(fixtures::set_of({u.zero(), {5}}))) == fixtures::set_of({u.zero(), {5}}));
  CHECK_THROWS_AS(rep_from_json(Json::parse(R"({"dims": {"9": 1}, "mats": {}})"), u.quiver_ptr(), u.prime()),
                  InvalidArgument);
  CHECK_THROWS_AS(rep_from_json(Json::parse(R"({"dims": {"1": 1, "2": 1}, "mats": {"a": [[1, 0]]}})"), u.quiver_ptr(),
                                u.prime()),
                  InvalidArgument);
}
