// Copyright 2026 The qe2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <string>

#include "doctest.h"
#include "qe2/relations.hpp"
#include "qe2cli/suite.hpp"

using namespace qe2::cli;

namespace {

nlohmann::ordered_json strip_runtimes(nlohmann::ordered_json j) {
  for (auto& s : j["suites"]) {
    for (auto& id : s["identities"]) id.erase("runtime_ms");
  }
  return j;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.q = {1.5, 0.0};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.q = {0.0, 0.0};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.suite = "nonsense";
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.fourier_samples = 100;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = RunConfig{};
    c.q = {1.5, 0.0};
    CHECK_THROWS_AS(run_suite(c), ConfigError);
  }

  TEST_CASE("list_identities") {
    const std::string text = list_identities();
    CHECK(text.find("Nb=b(N-2I)") != std::string::npos);
    CHECK(text.find("braided-pentagon") != std::string::npos);
    const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    CHECK(lines == identity_catalog().size());
    CHECK(identity_catalog().size() > qe2::relation_registry().size());
  }

  TEST_CASE("relations suite passes with exact residuals") {
    RunConfig c;
    c.suite = "relations";
    const SuiteReport r = run_suite(c);
    CHECK(r.passed);
    REQUIRE(r.suites.size() == 1);
    CHECK(r.suites[0].identities.size() == qe2::relation_registry().size());
    const auto j = to_json(r);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["suites"][0]["identities"][0]["records"][0]["residual"] == "exact");
  }

  TEST_CASE("reports are deterministic given config and seed") {
    RunConfig c;
    c.suite = "comult";
    c.seed = 42;
    const auto a = strip_runtimes(to_json(run_suite(c), false)).dump();
    const auto b = strip_runtimes(to_json(run_suite(c), false)).dump();
    CHECK(a == b);
    c.seed = 43;
    CHECK(strip_runtimes(to_json(run_suite(c), false)).dump() != a);
  }

  TEST_CASE("comult suite passes and the text report marks it") {
    RunConfig c;
    c.suite = "comult";
    const SuiteReport r = run_suite(c);
    CHECK(r.passed);
    CHECK(to_text(r).find("PASS comult-N") != std::string::npos);
  }
}
