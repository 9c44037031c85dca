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
#include <vector>

#include "flatstring/gauss_code.hpp"

namespace flatstring {

/// One side of an edge. Edge `edge` of a component runs from passage `edge`
/// to passage `edge + 1` (cyclically). A forward dart travels along the
/// component's orientation. Faces lie to the right of their darts.
struct Dart {
  std::uint32_t component = 0;
  std::uint32_t edge = 0;
  bool forward = true;

  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// A complementary disk of the Carter surface.
///
/// A crossing-free loop contributes two faces, one per side; each records the
/// loop as a single dart but has degree 0.
struct Face {
  std::vector<Dart> boundary;
  std::uint32_t group = 0;
  bool free_loop = false;

  std::size_t degree() const noexcept { return free_loop ? 0 : boundary.size(); }
};

/// One connected piece of the diagram (components linked by shared crossings).
struct DiagramGroup {
  std::vector<std::uint32_t> components;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;

  long euler_characteristic() const noexcept {
    return static_cast<long>(vertices) - static_cast<long>(edges) + static_cast<long>(faces);
  }
  long genus() const noexcept { return (2 - euler_characteristic()) / 2; }
};

struct FaceDecomposition {
  std::vector<Face> faces;
  std::vector<DiagramGroup> groups;
  std::vector<std::uint32_t> group_of_component;

  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept;
};

struct SurfaceReport {
  long genus_total = 0;
  std::vector<long> genus_per_component;
  std::size_t component_count = 0;
  bool connected = true;
};

/// Faces of the ribbon graph whose rotation at each crossing is
/// (tail out, head out, tail in, head in) counterclockwise.
FaceDecomposition trace_faces(const GaussCode& code);

SurfaceReport surface_report(const FaceDecomposition& faces);
SurfaceReport carter_genus(const GaussCode& code);

/// Partition of the loops by shared crossings, ordered by smallest member.
std::vector<std::vector<std::uint32_t>> diagram_components(const GaussCode& code);

/// Crossing met by the start of `dart` and by its end.
CrossingId dart_start_crossing(const GaussCode& code, const Dart& dart);
CrossingId dart_end_crossing(const GaussCode& code, const Dart& dart);

}  // namespace flatstring
