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

#include <algorithm>
#include <random>
#include <set>

#include "flatstring/canonical.hpp"
#include "flatstring/corpus.hpp"
#include "flatstring/errors.hpp"
#include "flatstring/moves.hpp"
#include "support/random_codes.hpp"

using namespace flatstring;

namespace {

std::size_t count_kind(const std::vector<MoveSite>& sites, MoveKind kind) {
  return static_cast<std::size_t>(
      std::count_if(sites.begin(), sites.end(), [&](const MoveSite& s) { return s.kind == kind; }));
}

bool some_move_returns(const GaussCode& from, const std::vector<MoveSite>& sites,
                       const CanonicalCode& target) {
  return std::any_of(sites.begin(), sites.end(), [&](const MoveSite& s) {
    return canonical_form(apply_move(from, s)) == target;
  });
}

}  // namespace

TEST_CASE("crossing deltas") {
  CHECK(crossing_delta(MoveKind::r1_decrease) == -1);
  CHECK(crossing_delta(MoveKind::r1_increase) == 1);
  CHECK(crossing_delta(MoveKind::r2_decrease) == -2);
  CHECK(crossing_delta(MoveKind::r2_increase) == 2);
  CHECK(crossing_delta(MoveKind::r3) == 0);
  CHECK(is_decreasing(MoveKind::r2_decrease));
  CHECK_FALSE(is_decreasing(MoveKind::r3));
}

TEST_CASE("decreasing moves on small codes") {
  const auto kink = parse_code("a+ a+");
  const auto sites = enumerate_decreasing(kink);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].kind == MoveKind::r1_decrease);
  CHECK(serialize(apply_move(kink, sites[0])) == "()");

  CHECK(enumerate_decreasing(parse_code("a+ / a+")).empty());
  CHECK(enumerate_r3(parse_code("a+ / a+")).empty());
}

TEST_CASE("R2-increase on a loop makes one removable bigon") {
  const auto loop = parse_code("()");
  const auto ups = enumerate_increasing(loop, 2);
  const auto r2 = count_kind(ups, MoveKind::r2_increase);
  REQUIRE(r2 > 0);
  for (const auto& s : ups) {
    if (s.kind != MoveKind::r2_increase) continue;
    const auto bigon = apply_move(loop, s);
    CAPTURE(serialize(bigon));
    CHECK(bigon.crossing_count() == 2);
    const auto downs = enumerate_decreasing(bigon);
    CHECK(count_kind(downs, MoveKind::r2_decrease) == 1);
    CHECK(some_move_returns(bigon, downs, canonical_form(loop)));
  }
}

TEST_CASE("R1-increase on a loop") {
  const auto loop = parse_code("()");
  const auto ups = enumerate_increasing(loop, 1);
  CHECK(ups.size() == 2);
  std::set<std::string> classes;
  for (const auto& s : ups) classes.insert(canonical_text(apply_move(loop, s)));
  // The left and right curls are isotopic on the sphere.
  CHECK(classes == std::set<std::string>{"1+ 1+"});
  CHECK(enumerate_increasing(loop, 0).empty());
}

TEST_CASE("R2-increase can join two separate loops") {
  const auto hemi = parse_code("() / ()");
  const auto target = canonical_form(parse_code("a+ b- / a+ b-"));
  bool found = false;
  for (const auto& s : enumerate_increasing(hemi, 2)) {
    if (s.kind != MoveKind::r2_increase) continue;
    const auto joined = apply_move(hemi, s);
    if (canonical_form(joined) != target) continue;
    found = true;
    CHECK(diagram_components(joined).size() == 1);
    CHECK(carter_genus(joined).genus_total == 0);
  }
  CHECK(found);
}

TEST_CASE("Type 3 sites on the interchange pair") {
  for (const auto* name : {"interchange_left", "interchange_right"}) {
    CAPTURE(name);
    const auto code = builtin_entry(name).code();
    const auto sites = enumerate_r3(code);
    CHECK(sites.size() == 2);
    for (const auto& s : sites) {
      const auto next = apply_move(code, s);
      CHECK(next.crossing_count() == code.crossing_count());
      CHECK(carter_genus(next).genus_total == carter_genus(code).genus_total);
      CHECK(canonical_form(next) != canonical_form(code));
    }
  }
}

TEST_CASE("Type 3 sites match trigon faces on the flat trefoil") {
  const auto trefoil = builtin_entry("planar_trefoil").code();
  const auto fd = trace_faces(trefoil);
  std::size_t trigons = 0;
  for (const auto& f : fd.faces) {
    if (f.degree() != 3) continue;
    std::set<CrossingId> xs;
    for (const auto& d : f.boundary) xs.insert(dart_start_crossing(trefoil, d));
    if (xs.size() == 3) ++trigons;
  }
  CHECK(trigons == 2);
  CHECK(enumerate_r3(trefoil).size() == trigons);
}

TEST_CASE("R3 is an involution on its trigon") {
  const auto trefoil = builtin_entry("planar_trefoil").code();
  const auto start = canonical_form(trefoil);
  for (const auto& s : enumerate_r3(trefoil)) {
    const auto next = apply_move(trefoil, s);
    CHECK(some_move_returns(next, enumerate_r3(next), start));
  }
}

TEST_CASE("stale sites are rejected") {
  const auto kink = parse_code("a+ a+");
  MoveSite bogus{MoveKind::r3, 0, {Dart{0, 0, true}, Dart{0, 1, true}, Dart{0, 0, false}}, true};
  CHECK_THROWS_AS(apply_move(kink, bogus), StaleSiteError);
  MoveSite far{MoveKind::r1_decrease, 7, {Dart{0, 0, true}}, true};
  CHECK_THROWS_AS(apply_move(kink, far), StaleSiteError);
  MoveSite wrong_comp{MoveKind::r1_increase, kNoFace, {Dart{3, 0, true}}, true};
  CHECK_THROWS_AS(apply_move(kink, wrong_comp), StaleSiteError);
}

TEST_CASE("move properties on random codes") {
  std::mt19937_64 rng(41);
  testing::RandomCodeOptions opt;
  opt.max_crossings = 4;
  for (int i = 0; i < 200; ++i) {
    const auto c = testing::random_code(rng, opt);
    CAPTURE(serialize(c));
    const auto start = canonical_form(c);
    const auto genus = carter_genus(c).genus_total;
    const auto groups = diagram_components(c);
    const auto sites = enumerate_all(c, c.crossing_count() + 2);
    CHECK(std::is_sorted(sites.begin(), sites.end()));
    for (const auto& s : sites) {
      CAPTURE(describe(s));
      const auto next = apply_move(c, s);
      // Construction validates the result.
      CHECK(static_cast<long>(next.crossing_count()) ==
            static_cast<long>(c.crossing_count()) + crossing_delta(s.kind));
      const auto g = carter_genus(next).genus_total;
      switch (s.kind) {
        case MoveKind::r3:
          CHECK(g == genus);
          CHECK(diagram_components(next) == groups);
          CHECK(some_move_returns(next, enumerate_r3(next), start));
          break;
        case MoveKind::r1_decrease:
        case MoveKind::r2_decrease:
          CHECK(g <= genus);
          break;
        case MoveKind::r1_increase:
        case MoveKind::r2_increase:
          CHECK(g == genus);
          CHECK(some_move_returns(next, enumerate_decreasing(next), start));
          break;
      }
    }
  }
}
