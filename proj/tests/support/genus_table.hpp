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

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatstring/canonical.hpp"

namespace flatstring::testing {

struct GenusRow {
  std::string code;
  long genus = 0;
  std::vector<std::size_t> degrees;
};

inline std::string source_path(const std::string& rel) {
  return std::string(FLATSTRING_SOURCE_DIR) + "/" + rel;
}

/// corpus/genus_table_le2.txt: "code | genus | degrees".
inline std::vector<GenusRow> load_genus_table() {
  std::ifstream in(source_path("corpus/genus_table_le2.txt"));
  if (!in) throw std::runtime_error("genus table not found");
  std::vector<GenusRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto p1 = line.find(" | ");
    const auto p2 = line.find(" | ", p1 + 3);
    GenusRow row;
    row.code = line.substr(0, p1);
    row.genus = std::stol(line.substr(p1 + 3, p2 - p1 - 3));
    std::istringstream ds(line.substr(p2 + 3));
    for (std::size_t d; ds >> d;) row.degrees.push_back(d);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Canonical texts of "()", "() / ()" and every code with one or two
/// crossings and no crossing-free component.
inline std::set<std::string> enumerate_small_codes() {
  std::set<std::string> out{"()", "() / ()"};
  for (CrossingId k = 1; k <= 2; ++k) {
    std::vector<Passage> tokens;
    for (CrossingId c = 0; c < k; ++c) {
      tokens.push_back({c, false});
      tokens.push_back({c, true});
    }
    std::vector<std::string> labels;
    for (CrossingId c = 0; c < k; ++c) labels.push_back(std::string(1, static_cast<char>('a' + c)));
    std::sort(tokens.begin(), tokens.end());
    const auto n = tokens.size();
    do {
      // Every subset of the n - 1 gaps is a way to cut into components.
      for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<Component> comps(1);
        for (std::size_t i = 0; i < n; ++i) {
          comps.back().push_back(tokens[i]);
          if (i + 1 < n && (mask >> i & 1)) comps.emplace_back();
        }
        out.insert(canonical_text(GaussCode(comps, labels)));
      }
    } while (std::next_permutation(tokens.begin(), tokens.end()));
  }
  return out;
}

}  // namespace flatstring::testing
