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
#include <string>
#include <string_view>
#include <vector>

namespace flatstring {

using CrossingId = std::uint32_t;

/// One traversal of a crossing.
///
/// Every crossing has a `tail` passage and a head passage, chosen so that
/// (direction of the tail strand, direction of the head strand) is a
/// positively oriented frame of the carrier surface. This is presentation
/// independent: rotating a component or reordering components never changes
/// which passage is the tail.
struct Passage {
  CrossingId crossing = 0;
  bool tail = false;

  friend bool operator==(const Passage&, const Passage&) = default;
  friend auto operator<=>(const Passage&, const Passage&) = default;
};

/// One oriented loop: a cyclic word of passages. Empty means a crossing-free loop.
using Component = std::vector<Passage>;

struct PassageIndex {
  std::uint32_t component = 0;
  std::uint32_t position = 0;

  friend bool operator==(const PassageIndex&, const PassageIndex&) = default;
  friend auto operator<=>(const PassageIndex&, const PassageIndex&) = default;
};

/// A virtual n-string as a signed multi-component Gauss code.
///
/// Crossings are numbered 0..k-1 and carry a user-facing label. The text sign
/// of a crossing is +1 when its first passage in traversal order (component
/// index, then position) is the tail, -1 otherwise. Construction validates all
/// invariants and throws ValidationError on failure; instances are immutable.
class GaussCode {
 public:
  /// The single crossing-free loop "()".
  GaussCode();
  GaussCode(std::vector<Component> components, std::vector<std::string> labels);

  const std::vector<Component>& components() const noexcept { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }
  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossing_count() const noexcept { return labels_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(CrossingId c) const { return labels_.at(c); }

  PassageIndex tail_of(CrossingId c) const { return tails_.at(c); }
  PassageIndex head_of(CrossingId c) const { return heads_.at(c); }
  PassageIndex first_of(CrossingId c) const;
  PassageIndex second_of(CrossingId c) const;
  const Passage& at(PassageIndex p) const {
    return components_.at(p.component).at(p.position);
  }

  /// +1 or -1, see the class comment.
  int sign(CrossingId c) const;

  /// Structural equality, labels included. Use canonical_form for isotopy.
  friend bool operator==(const GaussCode& a, const GaussCode& b) {
    return a.components_ == b.components_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Component> components_;
  std::vector<std::string> labels_;
  std::vector<PassageIndex> tails_;
  std::vector<PassageIndex> heads_;
};

bool is_valid_label(std::string_view label) noexcept;

/// Parses `component (' / ' component)*`, component := `()` | passages
/// separated by single spaces, passage := label sign. Surrounding whitespace
/// is ignored; everything else is bit-exact. Throws ParseError / ValidationError.
GaussCode parse_code(std::string_view text);

std::string serialize(const GaussCode& code);

/// Orientation reversal of the carrier surface: every text sign negates.
GaussCode mirror(const GaussCode& code);

/// Geometric symmetries. They change the presentation (and possibly the text
/// signs) but never the string itself.
GaussCode rotate_component(const GaussCode& code, std::size_t component, std::size_t shift);
GaussCode permute_components(const GaussCode& code, const std::vector<std::size_t>& order);
GaussCode relabel(const GaussCode& code, std::vector<std::string> labels);

/// Drops the given crossings and renumbers the rest, keeping labels.
GaussCode remove_crossings(const GaussCode& code, const std::vector<CrossingId>& crossings);

/// Smallest label of the form "x<n>", n >= 1, not used by `code`, skipping `taken`.
std::string fresh_label(const GaussCode& code, const std::vector<std::string>& taken = {});

}  // namespace flatstring
