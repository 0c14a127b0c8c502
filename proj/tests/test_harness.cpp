#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "nilred/checks.hpp"

using namespace nilred;

namespace {

CheckParams params_with(std::function<void(CheckParams&)> f) {
  CheckParams p;
  p.timeout_secs = 120;
  f(p);
  return p;
}

nlohmann::ordered_json normalized(const Report& r) {
  auto j = report_to_json(r);
  j["elapsed_ms"] = 0;
  return j;
}

}  // namespace

TEST_CASE("run_check on the registry examples") {
  auto r1 = run_check("shuffle_identity", params_with([](CheckParams& p) {
    p.type = Partition({2, 2});
  }));
  CHECK(r1.status == CheckStatus::pass);

  auto r2 = run_check("nilpotent_reduced", params_with([](CheckParams& p) {
    p.n = 2;
    p.e = 2;
    p.field = FieldSpec::Q();
  }));
  CHECK(r2.status == CheckStatus::pass);
  CHECK(r2.witness.find("GB") != std::string::npos);

  auto r3 = run_check("nilpotent_reduced", params_with([](CheckParams& p) {
    p.n = 1;
    p.e = 1;
  }));
  CHECK(r3.status == CheckStatus::pass);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run_check("no_such_check", CheckParams{}), std::invalid_argument);
  CHECK_THROWS_AS(run_check("nilpotent_reduced", params_with([](CheckParams& p) {
                    p.n = 2;
                    p.e = 2;
                    p.a = 3;
                    p.provided = {"n", "e", "a"};
                  })),
                  std::invalid_argument);
  // missing required parameter
  CHECK_THROWS_AS(run_check("surjectivity", CheckParams{}), std::invalid_argument);
}

TEST_CASE("timeouts surface as a status, not a failure") {
  auto r = run_check("nilpotent_reduced", params_with([](CheckParams& p) {
    p.n = 3;
    p.e = 2;
    p.timeout_secs = 1e-9;
  }));
  CHECK(r.status == CheckStatus::timeout);
}

TEST_CASE("json emission") {
  CHECK(reports_to_json_text({}) == "[]\n");
  Report r{"demo", nlohmann::ordered_json{{"n", 2}}, "Q", CheckStatus::pass, "ok", 17, 42};
  auto j = report_to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check", "params", "field", "status", "witness",
                                         "elapsed_ms", "seed"});
  CHECK(j["status"] == "pass");
  CHECK(j["seed"] == 42);
  std::string path = "harness_report_test.json";
  emit_reports({r}, path);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == reports_to_json_text({r}));
  std::remove(path.c_str());
}

TEST_CASE("same seed, same report (modulo elapsed time)") {
  auto mk = [] {
    return run_check("relative_dimension", params_with([](CheckParams& p) {
      p.n = 2;
      p.e = 2;
      p.trials = 10;
      p.seed = 7;
    }));
  };
  CHECK(normalized(mk()) == normalized(mk()));
  auto om = [] {
    return run_check("omega_involution", params_with([](CheckParams& p) {
      p.n = 3;
      p.trials = 5;
      p.seed = 11;
    }));
  };
  CHECK(normalized(om()) == normalized(om()));
}

TEST_CASE("suite plans") {
  CHECK_THROWS_AS(suite_plan("bogus", 0, 1), std::invalid_argument);
  size_t total = 0;
  for (const char* s : {"core", "reducedness", "surjectivity", "laurent"}) {
    auto plan = suite_plan(s, 0, 1);
    CHECK(!plan.empty());
    for (auto& [name, p] : plan) find_check(name);  // all names registered
    total += plan.size();
  }
  CHECK(suite_plan("all", 0, 1).size() == total);
}

TEST_CASE("suite reports are ordered and isolated") {
  // the surjectivity suite restricted by a tiny budget still never aborts
  auto reports = run_suite("reducedness", 0, 1e-9);
  REQUIRE(!reports.empty());
  for (size_t i = 1; i < reports.size(); ++i) {
    CHECK(reports[i - 1].check <= reports[i].check);
    CHECK(reports[i].status != CheckStatus::fail);  // timeout, not fail
  }
  CHECK(!any_failed(reports));
}
