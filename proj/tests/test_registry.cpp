/*
Copyright 2026 The jacsyz Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "errors.hpp"
#include "registry.hpp"

using namespace jacsyz;

namespace {

const std::vector<CurveEntry>& desk() {
  static const auto entries = load_registry(default_registry_path());
  return entries;
}

const CurveEntry& find(const std::string& id) {
  for (const auto& e : desk())
    if (e.id == id) return e;
  FAIL("missing registry id " << id);
  throw 0;
}

}  // namespace

TEST_CASE("formula evaluator") {
  CHECK(eval_formula("3*(d-2)", {{'d', 7}}) == 15);
  CHECK(eval_formula("k*(2*k+1)+k", {{'k', 5}}) == 60);
  CHECK(eval_formula("d*(d-1)/2", {{'d', 6}}) == 15);
  CHECK(eval_formula("-d+ 4", {{'d', 1}}) == 3);
  CHECK_THROWS_AS(eval_formula("d/4", {{'d', 6}}), Error);
  CHECK_THROWS_AS(eval_formula("3*(d-2", {{'d', 6}}), Error);
  CHECK_THROWS_AS(eval_formula("r+1", {{'d', 6}}), Error);
}

TEST_CASE("registry expands to desk scale") {
  std::set<std::string> ids;
  for (const auto& e : desk()) {
    CAPTURE(e.id);
    CHECK(ids.insert(e.id).second);
    CHECK(e.degree <= 13);
    CHECK(parse(e.expression).degree() == e.degree);
  }
  for (const char* id : {"prop4.1:d=3", "prop4.2:d=12", "prop4.3:d=8", "rk4.2", "ex4.5:C", "ex4.5:C'",
                         "ex4.6:C", "ex4.6:C'", "ex4.7:C", "ex4.7:C'", "ex4.7:C''", "ex4.8:k=3", "ex4.8:k=4",
                         "ex5.1:C", "ex5.1:C'", "ex5.1:C''", "ex5.1:C_6", "ex5.2:C_7", "ex5.2:C'", "ex5.3:C",
                         "ex5.3:C'", "ex5.3:C_8", "ex5.4:C_8", "ex5.4:C", "ex5.4:C'", "ex5.4:C''", "ex5.4:C'''",
                         "prop6.1:d=4", "thm6.2:k=2", "thm6.2:k=6", "rk6.3:k=3", "rk6.3:k=5"})
    CHECK_MESSAGE(ids.count(id) == 1, id);
  CHECK(ids.count("ex4.8:k=5") == 0);

  RegistryOptions all;
  all.all = true;
  const auto full = load_registry(default_registry_path(), all);
  CHECK(full.size() > desk().size());
  CHECK(std::any_of(full.begin(), full.end(), [](const CurveEntry& e) { return e.id == "ex5.1:C_20"; }));
}

TEST_CASE("claims are stored verbatim") {
  const auto& c = find("ex5.1:C_7");
  CHECK(*c.expected.tau == 18);
  CHECK(*c.expected.delta_m == 2);
  CHECK(*c.expected.epsilon_case == 1);
  CHECK(*find("ex5.2:C'").expected.tau == 32);
  CHECK(find("ex5.2:C'").flagged);
  CHECK(find("thm6.2:k=3").flagged);
  CHECK_FALSE(find("thm6.2:k=4").flagged);
}

TEST_CASE("glob filter") {
  CHECK(id_matches("prop4.2:*", "prop4.2:d=6"));
  CHECK_FALSE(id_matches("prop4.2:*", "prop4.3:d=8"));
  CHECK(id_matches("ex5.2:C'", "ex5.2:C'"));
  CHECK(id_matches("", "anything"));
}

TEST_CASE("verification outcomes") {
  for (const char* id : {"prop4.2:d=5", "prop4.2:d=6", "ex5.1:C", "ex4.5:C'", "thm6.2:k=4", "rk6.3:k=3"}) {
    CAPTURE(id);
    const auto r = verify_entry(find(id));
    CHECK(r.status == EntryStatus::Match);
    CHECK(describe(r).rfind("MATCH ", 0) == 0);
  }
  const auto bad = verify_entry(find("ex5.2:C'"));
  CHECK(bad.status == EntryStatus::Mismatch);
  CHECK(describe(bad).find("tau: computed 41, claimed 32") != std::string::npos);
  CHECK(describe(bad).find("(flagged)") != std::string::npos);

  CurveEntry broken;
  broken.id = "broken";
  broken.expression = "x^2*y";
  CHECK(verify_entry(broken).status == EntryStatus::Error);
}

TEST_CASE("parallel verification keeps registry order") {
  std::vector<CurveEntry> batch;
  for (const auto& e : load_registry(default_registry_path()))
    if (id_matches("prop4.[23]:*", e.id) || id_matches("ex4.*", e.id)) batch.push_back(e);
  REQUIRE(batch.size() > 6);
  std::vector<std::string> seen;
  const auto results = verify_entries(batch, {}, 3, [&](const EntryResult& r) { seen.push_back(r.entry.id); });
  REQUIRE(results.size() == batch.size());
  REQUIRE(seen.size() == batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    CHECK(seen[i] == batch[i].id);
    CHECK(results[i].entry.id == batch[i].id);
    CHECK(results[i].status == EntryStatus::Match);
  }
}
