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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flatstring/canonical.hpp"
#include "flatstring/moves.hpp"

namespace flatstring {

inline constexpr std::size_t kDefaultOrbitCap = 10000;

/// Canonical codes reachable by Type 3 moves alone.
struct OrbitSummary {
  std::vector<CanonicalCode> members;                         // sorted by text
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // member indices, i < j
  bool exhausted = false;
  std::size_t crossings = 0;
  long genus = 0;

  bool contains(const CanonicalCode& c) const;
};

OrbitSummary type3_orbit(const GaussCode& code, std::size_t cap = kDefaultOrbitCap);

struct IrreducibilityCertificate {
  bool irreducible = false;
  /// Exhausted orbit when irreducible; the explored part otherwise.
  OrbitSummary orbit;
  /// When reducible: the orbit member admitting a decreasing move, the R3
  /// moves reaching it from canonical(code) and the decreasing site.
  std::optional<CanonicalCode> witness_member;
  std::vector<MoveSite> witness_path;
  std::optional<MoveSite> witness_site;
};

/// Throws InconclusiveError if the orbit exceeds `cap` before a decreasing
/// move is found.
IrreducibilityCertificate is_crossing_irreducible(const GaussCode& code,
                                                  std::size_t cap = kDefaultOrbitCap);

struct TraceStep {
  MoveSite move;  // relative to the canonical state before the step
  std::size_t crossings_after = 0;
  long genus_after = 0;
  CanonicalCode after;
};

struct ReductionTrace {
  CanonicalCode initial;
  std::vector<TraceStep> steps;

  const CanonicalCode& final_code() const {
    return steps.empty() ? initial : steps.back().after;
  }
};

struct Reduction {
  GaussCode code;  // canonical representative of the final state
  ReductionTrace trace;
  bool complete = false;  // false when an orbit hit its cap mid-reduction
};

/// Repeatedly walks the Type 3 orbit in breadth-first order to the first
/// member that admits a decreasing move and applies its first such move.
Reduction reduce_monotone(const GaussCode& code, std::size_t cap = kDefaultOrbitCap);

/// Replays moves from `start`, canonicalizing after every step. Throws
/// StaleSiteError if a move does not apply.
CanonicalCode replay(const CanonicalCode& start, std::span<const MoveSite> moves);

struct ScrambleResult {
  GaussCode code;
  std::size_t steps_applied = 0;
  bool stuck = false;  // no move available within the budget
};

/// `steps` moves drawn uniformly from enumerate_all(code, budget) with a
/// seeded 64-bit Mersenne twister; identical arguments give identical output.
ScrambleResult scramble(const GaussCode& code, std::uint64_t seed, std::size_t steps,
                        std::size_t budget);

}  // namespace flatstring
