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

#include <random>

#include "flatstring/corpus.hpp"
#include "flatstring/errors.hpp"
#include "flatstring/search.hpp"
#include "flatstring/surface.hpp"
#include "support/random_codes.hpp"

using namespace flatstring;

TEST_CASE("type3_orbit examples") {
  const auto hopf = type3_orbit(parse_code("a+ / a+"));
  CHECK(hopf.exhausted);
  CHECK(hopf.members.size() == 1);

  const auto left = type3_orbit(builtin_entry("interchange_left").code());
  CHECK(left.exhausted);
  CHECK(left.members.size() == 2);
  CHECK(left.adjacency.size() == 1);
  CHECK(left.crossings == 8);
  CHECK(left.genus == 2);
  for (const auto& m : left.members) {
    CHECK(m.code().crossing_count() == 8);
    CHECK(carter_genus(m.code()).genus_total == 2);
  }
}

TEST_CASE("orbit cap") {
  const auto code = builtin_entry("planar_trefoil").code();
  const auto full = type3_orbit(code);
  REQUIRE(full.members.size() > 1);
  const auto capped = type3_orbit(code, 1);
  CHECK_FALSE(capped.exhausted);
  CHECK(capped.members.size() == 1);
}

TEST_CASE("orbit member set does not depend on the starting member") {
  for (const auto* name : {"planar_trefoil", "interchange_left", "interchange_right"}) {
    const auto base = type3_orbit(builtin_entry(name).code());
    for (const auto& m : base.members) {
      CHECK(type3_orbit(m.code()).members == base.members);
    }
  }
}

TEST_CASE("is_crossing_irreducible") {
  const auto kink = is_crossing_irreducible(parse_code("a+ a+"));
  CHECK_FALSE(kink.irreducible);
  REQUIRE(kink.witness_site.has_value());
  CHECK(kink.witness_site->kind == MoveKind::r1_decrease);
  CHECK(kink.witness_path.empty());

  CHECK(is_crossing_irreducible(parse_code("a+ / a+")).irreducible);
  CHECK(is_crossing_irreducible(builtin_entry("interchange_left").code()).irreducible);
  CHECK(is_crossing_irreducible(builtin_entry("interchange_right").code()).irreducible);
  CHECK_THROWS_AS(is_crossing_irreducible(builtin_entry("interchange_left").code(), 1),
                  InconclusiveError);
}

TEST_CASE("reducible certificate replays") {
  const auto code = builtin_entry("planar_trefoil").code();
  const auto cert = is_crossing_irreducible(code);
  REQUIRE_FALSE(cert.irreducible);
  const auto member = replay(canonical_form(code), cert.witness_path);
  CHECK(member == *cert.witness_member);
  CHECK(apply_move(member.code(), *cert.witness_site).crossing_count() < code.crossing_count());
}

TEST_CASE("reduce_monotone examples") {
  const auto kink = reduce_monotone(parse_code("a+ a+"));
  CHECK(kink.complete);
  CHECK(kink.trace.steps.size() == 1);
  CHECK(serialize(kink.code) == "()");

  for (const auto* name : {"interchange_left", "interchange_right"}) {
    const auto r = reduce_monotone(builtin_entry(name).code());
    CHECK(r.trace.steps.empty());
    CHECK(r.trace.final_code() == canonical_form(builtin_entry(name).code()));
  }
}

TEST_CASE("scrambled Hopf pair reduces back") {
  const auto hopf = parse_code("a+ / a+");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = scramble(hopf, seed, 6, 5);
    CHECK(canonical_form(reduce_monotone(s.code).code) == canonical_form(hopf));
  }
}

TEST_CASE("reduction traces are monotone and end irreducible") {
  std::mt19937_64 rng(51);
  testing::RandomCodeOptions opt;
  opt.max_crossings = 7;
  for (int i = 0; i < 200; ++i) {
    const auto c = testing::random_code(rng, opt);
    CAPTURE(serialize(c));
    const auto r = reduce_monotone(c);
    REQUIRE(r.complete);
    std::size_t x = c.crossing_count();
    long g = carter_genus(c).genus_total;
    for (const auto& s : r.trace.steps) {
      CHECK(s.crossings_after < x);
      CHECK(s.genus_after <= g);
      x = s.crossings_after;
      g = s.genus_after;
    }
    CHECK(is_crossing_irreducible(r.code).irreducible);
    CHECK(replay(r.trace.initial, [&] {
            std::vector<MoveSite> m;
            for (const auto& s : r.trace.steps) m.push_back(s.move);
            return m;
          }()) == r.trace.final_code());
  }
}

TEST_CASE("scramble") {
  const auto code = parse_code("a+ b+ c+ a+ c+ b+");
  CHECK(scramble(code, 3, 0, 5).code == code);
  const auto a = scramble(code, 99, 10, 8);
  const auto b = scramble(code, 99, 10, 8);
  CHECK(a.code == b.code);
  CHECK(a.steps_applied == 10);
  CHECK(a.code.crossing_count() <= 8);
  const auto stuck = scramble(parse_code("()"), 1, 5, 0);
  CHECK(stuck.stuck);
  CHECK(stuck.steps_applied == 0);
}

TEST_CASE("replay rejects stale moves") {
  const std::vector<MoveSite> moves{MoveSite{MoveKind::r1_decrease, 0, {Dart{0, 0, true}}, true}};
  CHECK_THROWS_AS(replay(canonical_form(parse_code("a+ / a+")), moves), StaleSiteError);
}
