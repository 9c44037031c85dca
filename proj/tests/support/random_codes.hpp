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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flatstring/gauss_code.hpp"

namespace flatstring::testing {

struct RandomCodeOptions {
  std::size_t max_components = 3;
  std::size_t max_crossings = 6;
  /// Chance that a component is left crossing-free when it could be.
  double empty_component_chance = 0.1;
};

/// Uniformly shuffles the 2k passages of k crossings and cuts the sequence
/// into components. Labels are c0, c1, ...
inline GaussCode random_code(std::mt19937_64& rng, const RandomCodeOptions& opt = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const auto k = pick(0, opt.max_crossings);
  const auto n = pick(1, opt.max_components);
  std::vector<Passage> passages;
  for (CrossingId c = 0; c < k; ++c) {
    passages.push_back({c, true});
    passages.push_back({c, false});
  }
  std::shuffle(passages.begin(), passages.end(), rng);

  std::vector<std::size_t> sizes(n, 0);
  std::bernoulli_distribution empty(opt.empty_component_chance);
  std::size_t left = passages.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == n) {
      sizes[i] = left;
    } else if (left > 0 && !empty(rng)) {
      sizes[i] = pick(1, left);
    }
    left -= sizes[i];
  }
  std::vector<Component> comps;
  std::size_t at = 0;
  for (auto s : sizes) {
    comps.emplace_back(passages.begin() + static_cast<std::ptrdiff_t>(at),
                       passages.begin() + static_cast<std::ptrdiff_t>(at + s));
    at += s;
  }
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < k; ++c) labels.push_back("c" + std::to_string(c));
  return GaussCode(std::move(comps), std::move(labels));
}

/// Random rotation of every component, random relabeling and random
/// component order.
inline GaussCode random_symmetry(const GaussCode& code, std::mt19937_64& rng) {
  GaussCode out = code;
  for (std::size_t ci = 0; ci < out.component_count(); ++ci) {
    const auto size = out.component(ci).size();
    if (size > 0) {
      out = rotate_component(out, ci, std::uniform_int_distribution<std::size_t>(0, size - 1)(rng));
    }
  }
  std::vector<std::size_t> order(out.component_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  out = permute_components(out, order);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < out.crossing_count(); ++c) labels.push_back("z" + std::to_string(c));
  std::shuffle(labels.begin(), labels.end(), rng);
  return relabel(out, labels);
}

}  // namespace flatstring::testing
