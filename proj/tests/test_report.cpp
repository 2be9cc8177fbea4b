/* Copyright 2026 The Bee Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "bee/report.hpp"
#include "doctest.h"

using namespace bee;

namespace {

CaseReport outcome(const char* id, const char* what, bool overfit = false) {
  CaseReport c;
  c.id = id;
  c.outcome = what;
  c.overfit = overfit;
  return c;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("rates follow the solved/total and overfit/solved convention") {
    RunReport r;
    r.cases = {outcome("a", "solved"), outcome("b", "solved", true), outcome("c", "timeout"),
               outcome("d", "exhausted")};
    CHECK(r.solved() == 2);
    CHECK(r.overfit() == 1);
    CHECK(r.success_rate() == doctest::Approx(0.5));
    CHECK(r.overfit_rate() == doctest::Approx(0.5));
    RunReport empty;
    CHECK(empty.success_rate() == 0.0);
    CHECK(empty.overfit_rate() == 0.0);
  }

  TEST_CASE("case pass rule") {
    CHECK(outcome("a", "solved").passes());
    CHECK_FALSE(outcome("a", "solved", true).passes());
    CHECK_FALSE(outcome("a", "timeout").passes());
    CaseReport broken = outcome("a", "solved");
    broken.reference_ok = false;
    CHECK_FALSE(broken.passes());
  }

  TEST_CASE("report JSON") {
    RunReport r;
    r.mode = SearchMode::ForwardOnly;
    r.cases = {outcome("a", "solved")};
    json j = reports_to_json({r});
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["mode"] == "forward-only");
    CHECK(j["reports"][0]["aggregate"]["total"] == 1);
    CHECK(j["reports"][0]["cases"][0]["reference_ok"].is_null());
    CHECK(render_report(r).find("solved 1/1") != std::string::npos);
  }

  TEST_CASE("bench over an empty list") {
    RunReport r = run_bench({}, {}, 4);
    CHECK(r.cases.empty());
  }
}
