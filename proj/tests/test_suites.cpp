#include <doctest.h>

#include <string>

#include "mgx/suites.hpp"

using namespace mgx;

TEST_CASE("every registered suite passes on a reduced corpus") {
  SuiteCaps caps;
  caps.max_n = 5;
  caps.samples = 60;
  caps.seed = 3;
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    const SuiteResult r = run_suite(name, caps);
    CHECK(r.suite == name);
    CHECK(r.checked > 0);
    CHECK(r.passed());
    CHECK(r.failures_dropped == 0);
  }
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 14);
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("suite report json") {
  SuiteCaps caps;
  caps.max_n = 4;
  const auto j = run_suite("cycles", caps).to_json();
  CHECK(j["suite"] == "cycles");
  CHECK(j["checked"].get<std::size_t>() == 27 + 81);
  CHECK(j["failures"].empty());
  CHECK(j.contains("millis"));
  CHECK_FALSE(run_suite("cycles", caps).to_json(false).contains("millis"));
}

TEST_CASE("same seed gives the same report") {
  SuiteCaps caps;
  caps.samples = 40;
  caps.seed = 17;
  const auto a = run_suite("inertia-agreement", caps).to_json(false);
  const auto b = run_suite("inertia-agreement", caps).to_json(false);
  CHECK(a == b);
}
