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
#include <functional>
#include <string>

#include "flatstring/gauss_code.hpp"

namespace flatstring {

/// A code in normal form together with its serialization.
///
/// The normal form picks, over every component order and every rotation of
/// every component, the presentation whose serialization (with crossings
/// relabeled 1..k by first occurrence) is lexicographically smallest. Two
/// codes have equal canonical forms iff they present the same chord diagram,
/// i.e. they differ only by isotopy and (de)stabilization. Mirror images and
/// reversed component orientations are not identified.
class CanonicalCode {
 public:
  /// The canonical form of "()".
  CanonicalCode() : text_("()") {}

  const GaussCode& code() const noexcept { return code_; }
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.text_ == b.text_;
  }
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.text_ <=> b.text_;
  }

 private:
  CanonicalCode(GaussCode code, std::string text)
      : code_(std::move(code)), text_(std::move(text)) {}
  friend CanonicalCode canonical_form(const GaussCode& code);

  GaussCode code_;
  std::string text_;
};

CanonicalCode canonical_form(const GaussCode& code);

/// Shorthand for canonical_form(code).text().
std::string canonical_text(const GaussCode& code);

}  // namespace flatstring

template <>
struct std::hash<flatstring::CanonicalCode> {
  std::size_t operator()(const flatstring::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.text());
  }
};
