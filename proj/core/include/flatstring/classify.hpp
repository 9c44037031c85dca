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
#include <string>
#include <vector>

#include "flatstring/canonical.hpp"
#include "flatstring/search.hpp"

namespace flatstring {

enum class ParallelLevel : std::uint8_t { none_detected, suspect, confirmed };

std::string to_string(ParallelLevel level);

struct PairFlag {
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  ParallelLevel level = ParallelLevel::none_detected;
};

struct ParallelReport {
  ParallelLevel overall = ParallelLevel::none_detected;
  std::vector<PairFlag> pairs;  // only flagged pairs
};

/// Partial test for "powers of parallel curves" on a crossing-irreducible code.
///
/// A pair with no mutual crossings is confirmed when both loops are
/// crossing-free, or when they sit in one diagram component and the cyclic
/// sequence of crossings each makes with the other loops is, up to rotation,
/// the same (with equal self-crossing patterns) or a power of the other's.
/// It is suspect when their (algebraic, geometric) intersection counts with
/// every other loop are proportional. Absence of flags proves nothing.
ParallelReport parallel_heuristic(const GaussCode& code);

struct ClassReport {
  bool connected_class = false;
  ParallelReport parallel;
  CanonicalCode reduced_code;
  std::vector<std::string> caveats;
};

/// Reduces first and only then classifies: for connected strings a
/// genus-minimal representative decides parallelism. Throws InconclusiveError
/// when the reduction hits the orbit cap.
ClassReport classify(const GaussCode& code, std::size_t cap = kDefaultOrbitCap);

/// connected_class and no parallel flag.
bool connected_nonparallel(const ClassReport& report) noexcept;

}  // namespace flatstring
