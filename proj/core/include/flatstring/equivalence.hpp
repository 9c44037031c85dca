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

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatstring/canonical.hpp"
#include "flatstring/classify.hpp"
#include "flatstring/moves.hpp"
#include "flatstring/search.hpp"

namespace flatstring {

enum class EquivalenceStatus : std::uint8_t {
  equivalent_with_witness,
  distinct_orbits_at_minimum,
  inconclusive_budget_exhausted,
};

std::string to_string(EquivalenceStatus status);

struct EquivalenceLimits {
  /// Maximum crossing count of any intermediate code; must be at least the
  /// crossing count of both inputs.
  std::size_t budget = 0;
  std::size_t max_states = 2'000'000;
  /// Maximum witness length.
  std::size_t max_depth = 64;
  /// Zero means no limit.
  std::chrono::milliseconds time_limit{0};
  unsigned threads = 1;
  std::size_t orbit_cap = kDefaultOrbitCap;
};

struct EquivalenceVerdict {
  EquivalenceStatus status = EquivalenceStatus::inconclusive_budget_exhausted;
  CanonicalCode from;
  CanonicalCode to;
  /// Replayable with replay(from, witness); each site is relative to the
  /// canonical state before it.
  std::vector<MoveSite> witness;
  std::size_t budget = 0;
  std::size_t states_explored = 0;
  std::size_t depth_explored = 0;
  /// Why the search stopped: "met", "identical", "certified", "state limit",
  /// "time limit", "depth limit", "move graph exhausted within budget", or
  /// "reduction orbits meet".
  std::string stop_reason;
  std::vector<std::string> caveats;
};

/// Bidirectional breadth-first search over canonical codes using every move
/// within the crossing budget. Before searching, both inputs are reduced; if
/// both classify as connected with no parallel flag and their Type 3 orbits
/// are exhausted and disjoint, the pair is certified distinct. If the search
/// fails but the reduced orbits meet, the witness is assembled from the two
/// reduction traces instead.
///
/// Witnesses are shortest within the explored levels; ties break on the
/// meeting code's text and then on site order, so results do not depend on
/// the thread count.
EquivalenceVerdict equivalent_bounded(const GaussCode& a, const GaussCode& b,
                                      const EquivalenceLimits& limits);

/// The first enumerated move (within `budget`) taking `from` to a code whose
/// canonical form is `to`.
std::optional<MoveSite> move_between(const GaussCode& from, const CanonicalCode& to,
                                     std::size_t budget);

}  // namespace flatstring
