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

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "flatstring/gauss_code.hpp"
#include "flatstring/surface.hpp"

namespace flatstring {

enum class MoveKind : std::uint8_t {
  r1_decrease,
  r1_increase,
  r2_decrease,
  r2_increase,
  r3,
};

inline constexpr std::uint32_t kNoFace = std::numeric_limits<std::uint32_t>::max();

/// A located flat Reidemeister move.
///
///  - r1_decrease: the monogon face `face`; darts = its single dart.
///  - r2_decrease: the bigon face `face`; darts = its two darts.
///  - r3:          the trigon face `face`; darts = its three darts.
///  - r1_increase: darts = {edge to put the kink on}; `tail_first` picks the
///                 kink's sign (first inserted passage is the tail).
///  - r2_increase: darts = {pushed side, crossed side}, both on `face`, or
///                 `face == kNoFace` when the darts lie in different diagram
///                 components (the carriers are joined by a tube first).
///                 When both darts are on one edge, `tail_first` says whether
///                 the finger's base precedes the crossed point on that edge.
///
/// Sites compare lexicographically by (kind, face, darts, tail_first), which
/// is the enumeration order.
struct MoveSite {
  MoveKind kind = MoveKind::r3;
  std::uint32_t face = kNoFace;
  std::vector<Dart> darts;
  bool tail_first = true;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
  friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

/// -1, +1, -2, +2 or 0.
int crossing_delta(MoveKind kind) noexcept;
bool is_decreasing(MoveKind kind) noexcept;
std::string to_string(MoveKind kind);
std::string describe(const MoveSite& site);

/// Monogon and bigon faces, one site per removed crossing set.
std::vector<MoveSite> enumerate_decreasing(const GaussCode& code);
std::vector<MoveSite> enumerate_decreasing(const GaussCode& code, const FaceDecomposition& faces);

/// Trigon faces with three distinct crossings.
std::vector<MoveSite> enumerate_r3(const GaussCode& code);
std::vector<MoveSite> enumerate_r3(const GaussCode& code, const FaceDecomposition& faces);

/// Kinks on every edge (both signs) and finger moves between co-facial edges,
/// restricted to results with at most `budget` crossings.
std::vector<MoveSite> enumerate_increasing(const GaussCode& code, std::size_t budget);
std::vector<MoveSite> enumerate_increasing(const GaussCode& code, const FaceDecomposition& faces,
                                           std::size_t budget);

/// Every site of every kind within `budget`, sorted.
std::vector<MoveSite> enumerate_all(const GaussCode& code, std::size_t budget);
std::vector<MoveSite> enumerate_all(const GaussCode& code, const FaceDecomposition& faces,
                                    std::size_t budget);

/// Applies `site`, throwing StaleSiteError if it does not describe a move on `code`.
GaussCode apply_move(const GaussCode& code, const MoveSite& site);

/// As apply_move, for sites taken from an enumeration of `code`.
GaussCode apply_enumerated(const GaussCode& code, const MoveSite& site);

}  // namespace flatstring
