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

#include "flatstring/classify.hpp"
#include "flatstring/corpus.hpp"
#include "flatstring/errors.hpp"

using namespace flatstring;

TEST_CASE("classify examples") {
  const auto hopf = classify(parse_code("a+ / a+"));
  CHECK(hopf.connected_class);
  CHECK(hopf.parallel.overall == ParallelLevel::none_detected);
  CHECK(connected_nonparallel(hopf));
  CHECK_FALSE(hopf.caveats.empty());

  const auto hemi = classify(parse_code("() / ()"));
  CHECK_FALSE(hemi.connected_class);
  CHECK(hemi.parallel.overall == ParallelLevel::confirmed);

  const auto kink_loop = classify(parse_code("a+ a+ / ()"));
  CHECK_FALSE(kink_loop.connected_class);
  CHECK(kink_loop.reduced_code.text() == "() / ()");
}

TEST_CASE("parallel heuristic") {
  CHECK(parallel_heuristic(parse_code("() / ()")).overall == ParallelLevel::confirmed);
  CHECK(parallel_heuristic(parse_code("a+ / a+")).overall == ParallelLevel::none_detected);

  // Two parallel loops each crossing a third once.
  const auto ladder = parallel_heuristic(parse_code("a+ b+ / a+ / b+"));
  REQUIRE(ladder.pairs.size() == 1);
  CHECK(ladder.pairs[0].first == 1);
  CHECK(ladder.pairs[0].second == 2);
  CHECK(ladder.pairs[0].level == ParallelLevel::confirmed);
}

TEST_CASE("red and green loops of the interchange pair are flagged") {
  for (const auto* name : {"interchange_left", "interchange_right"}) {
    const auto r = classify(builtin_entry(name).code());
    CHECK(r.connected_class);
    bool flagged = false;
    for (const auto& p : r.parallel.pairs) {
      if (p.first == 1 && p.second == 2) flagged = p.level != ParallelLevel::none_detected;
    }
    CHECK(flagged);
    CHECK_FALSE(connected_nonparallel(r));
  }
}

TEST_CASE("confirmed pairs share no crossings") {
  for (const auto& e : builtin_corpus()) {
    const auto code = e.code();
    const auto r = classify(code);
    for (const auto& p : r.parallel.pairs) {
      const auto& red = r.reduced_code.code();
      for (const auto& x : red.component(p.first)) {
        const auto other = red.tail_of(x.crossing).component == p.first
                               ? red.head_of(x.crossing).component
                               : red.tail_of(x.crossing).component;
        CHECK(other != p.second);
      }
    }
  }
}

TEST_CASE("classify propagates an inconclusive reduction") {
  CHECK_THROWS_AS(classify(builtin_entry("interchange_left").code(), 1), InconclusiveError);
}
