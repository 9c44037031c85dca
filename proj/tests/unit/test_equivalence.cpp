/*
 * Copyright 2026 The flatstring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include "flatstring/corpus.hpp"
#include "flatstring/equivalence.hpp"
#include "flatstring/errors.hpp"

using namespace flatstring;

namespace {

EquivalenceLimits limits(std::size_t budget, unsigned threads = 1) {
  EquivalenceLimits lim;
  lim.budget = budget;
  lim.threads = threads;
  lim.time_limit = std::chrono::seconds(120);
  return lim;
}

}  // namespace

TEST_CASE("identical inputs") {
  const auto x = parse_code("a+ b+ / a+ b+");
  const auto v = equivalent_bounded(x, parse_code("b+ a+ / b+ a+"), limits(2));
  CHECK(v.status == EquivalenceStatus::equivalent_with_witness);
  CHECK(v.witness.empty());
}

TEST_CASE("kink and loop") {
  const auto v = equivalent_bounded(parse_code("a+ a+"), parse_code("()"), limits(1));
  REQUIRE(v.status == EquivalenceStatus::equivalent_with_witness);
  CHECK(v.witness.size() == 1);
  CHECK(replay(v.from, v.witness) == v.to);
}

TEST_CASE("certified distinct for connected non-parallel strings") {
  const auto v =
      equivalent_bounded(parse_code("a+ / a+"), parse_code("a+ b+ / a+ b+"), limits(2));
  CHECK(v.status == EquivalenceStatus::distinct_orbits_at_minimum);
  CHECK_FALSE(v.caveats.empty());
}

TEST_CASE("no certificate without the hypotheses") {
  const auto v = equivalent_bounded(parse_code("() / ()"), parse_code("a+ / a+"), limits(3));
  CHECK(v.status == EquivalenceStatus::inconclusive_budget_exhausted);
  CHECK(v.stop_reason == "move graph exhausted within budget");
}

TEST_CASE("interchange pair witness") {
  const auto a = builtin_entry("interchange_left").code();
  const auto b = builtin_entry("interchange_right").code();

  const auto low = equivalent_bounded(a, b, limits(9));
  CHECK(low.status == EquivalenceStatus::inconclusive_budget_exhausted);

  const auto v = equivalent_bounded(a, b, limits(10));
  REQUIRE(v.status == EquivalenceStatus::equivalent_with_witness);
  CHECK(replay(v.from, v.witness) == v.to);

  const auto back = equivalent_bounded(b, a, limits(10));
  REQUIRE(back.status == v.status);
  CHECK(back.witness.size() == v.witness.size());
  CHECK(replay(back.from, back.witness) == back.to);

  const auto threaded = equivalent_bounded(a, b, limits(10, 4));
  CHECK(threaded.witness == v.witness);
  CHECK(threaded.states_explored == v.states_explored);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(equivalent_bounded(parse_code("a+ / a+"), parse_code("()"), limits(0)),
                  ValidationError);
  auto lim = limits(10);
  lim.max_states = 10;
  const auto v = equivalent_bounded(builtin_entry("interchange_left").code(),
                                    builtin_entry("interchange_right").code(), lim);
  CHECK(v.status == EquivalenceStatus::inconclusive_budget_exhausted);
  CHECK(v.stop_reason == "state limit");
}

TEST_CASE("move_between") {
  const auto kink = parse_code("a+ a+");
  const auto site = move_between(kink, canonical_form(parse_code("()")), 1);
  REQUIRE(site.has_value());
  CHECK(site->kind == MoveKind::r1_decrease);
  CHECK_FALSE(move_between(kink, canonical_form(parse_code("a+ / a+")), 3).has_value());
}
