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

#include "flatstring/classify.hpp"

#include <algorithm>
#include <map>

#include "flatstring/errors.hpp"
#include "flatstring/surface.hpp"

namespace flatstring {

std::string to_string(ParallelLevel level) {
  switch (level) {
    case ParallelLevel::none_detected: return "none-detected";
    case ParallelLevel::suspect: return "suspect";
    case ParallelLevel::confirmed: return "confirmed-parallel";
  }
  return "?";
}

namespace {

using Letter = std::pair<std::uint32_t, bool>;  // (other loop, this passage is the tail)

struct LoopProfile {
  std::vector<Letter> word;                                  // crossings with other loops
  std::map<std::uint32_t, std::pair<long, long>> intersect;  // other -> (algebraic, geometric)
  std::string standalone;                                    // canonical self-crossing pattern
};

std::uint32_t other_component(const GaussCode& code, CrossingId c, std::uint32_t self) {
  const auto t = code.tail_of(c).component;
  return t == self ? code.head_of(c).component : t;
}

bool is_self(const GaussCode& code, CrossingId c) {
  return code.tail_of(c).component == code.head_of(c).component;
}

LoopProfile profile(const GaussCode& code, std::uint32_t ci) {
  LoopProfile p;
  std::vector<CrossingId> selfs;
  for (const auto& pass : code.component(ci)) {
    if (is_self(code, pass.crossing)) {
      selfs.push_back(pass.crossing);
      continue;
    }
    const auto other = other_component(code, pass.crossing, ci);
    p.word.emplace_back(other, pass.tail);
    auto& [alg, geo] = p.intersect[other];
    alg += pass.tail ? 1 : -1;
    geo += 1;
  }
  // The loop on its own: keep self-crossings only.
  std::vector<CrossingId> drop;
  for (CrossingId c = 0; c < code.crossing_count(); ++c) {
    const bool mine = code.tail_of(c).component == ci || code.head_of(c).component == ci;
    if (!(mine && is_self(code, c))) drop.push_back(c);
  }
  const auto reduced = remove_crossings(code, drop);
  p.standalone = canonical_text(GaussCode({reduced.component(ci)}, reduced.labels()));
  return p;
}

bool rotation_equal(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + r) % b.size()];
    if (ok) return true;
  }
  return false;
}

// True when `big` is, up to rotation, `small` repeated at least twice.
bool rotation_power(const std::vector<Letter>& small, const std::vector<Letter>& big) {
  if (small.empty() || big.size() <= small.size() || big.size() % small.size() != 0) return false;
  std::vector<Letter> repeated;
  while (repeated.size() < big.size()) repeated.insert(repeated.end(), small.begin(), small.end());
  return rotation_equal(repeated, big);
}

bool proportional(const LoopProfile& a, const LoopProfile& b, std::uint32_t i, std::uint32_t j) {
  // Compare intersections with every loop other than the pair itself.
  std::map<std::uint32_t, std::pair<long, long>> pa = a.intersect, pb = b.intersect;
  pa.erase(j);
  pb.erase(i);
  std::vector<std::uint32_t> keys;
  for (const auto& [k, v] : pa) keys.push_back(k);
  for (const auto& [k, v] : pb) keys.push_back(k);
  long num = 0, den = 0;  // ratio |b| / |a| as a fraction, fixed by the first nonzero entry
  for (auto k : keys) {
    const auto va = pa.count(k) ? pa[k] : std::pair<long, long>{0, 0};
    const auto vb = pb.count(k) ? pb[k] : std::pair<long, long>{0, 0};
    for (auto [x, y] : {std::pair{va.first, vb.first}, std::pair{va.second, vb.second}}) {
      if (x == 0 && y == 0) continue;
      if (x == 0 || y == 0) return false;
      if (den == 0) {
        num = y;
        den = x;
      } else if (y * den != num * x) {
        return false;
      }
    }
  }
  return den == 0 || (num > 0) == (den > 0);
}

}  // namespace

ParallelReport parallel_heuristic(const GaussCode& code) {
  ParallelReport report;
  const auto fd = trace_faces(code);
  const auto n = static_cast<std::uint32_t>(code.component_count());
  std::vector<LoopProfile> profiles;
  profiles.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) profiles.push_back(profile(code, i));

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const auto& a = profiles[i];
      const auto& b = profiles[j];
      if (a.intersect.count(j) != 0) continue;  // mutual crossings: not disjoint
      const bool both_free = code.component(i).empty() && code.component(j).empty();
      const bool same_group = fd.group_of_component[i] == fd.group_of_component[j];
      ParallelLevel level = ParallelLevel::none_detected;
      if (both_free) {
        level = ParallelLevel::confirmed;
      } else if (same_group &&
                 ((a.standalone == b.standalone && rotation_equal(a.word, b.word)) ||
                  rotation_power(a.word, b.word) || rotation_power(b.word, a.word))) {
        level = ParallelLevel::confirmed;
      } else if (proportional(a, b, i, j)) {
        level = ParallelLevel::suspect;
      }
      if (level == ParallelLevel::none_detected) continue;
      report.pairs.push_back(PairFlag{i, j, level});
      report.overall = std::max(report.overall, level);
    }
  }
  return report;
}

ClassReport classify(const GaussCode& code, std::size_t cap) {
  auto red = reduce_monotone(code, cap);
  if (!red.complete) {
    throw InconclusiveError("reduction hit the Type 3 orbit cap of " + std::to_string(cap));
  }
  ClassReport r{diagram_components(red.code).size() == 1, parallel_heuristic(red.code),
                red.trace.final_code(), {}};
  r.caveats.push_back(
      "parallelism is a heuristic: confirmed/suspect flags are evidence, none-detected is not a "
      "proof of non-parallelism");
  if (!r.connected_class) {
    r.caveats.push_back(
        "non-connected class: the minimal-representative parallelism check does not apply");
  }
  return r;
}

bool connected_nonparallel(const ClassReport& report) noexcept {
  return report.connected_class && report.parallel.overall == ParallelLevel::none_detected;
}

}  // namespace flatstring
