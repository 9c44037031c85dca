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

#include "flatstring/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <string_view>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "flatstring/errors.hpp"

namespace flatstring {

std::string to_string(EquivalenceStatus status) {
  switch (status) {
    case EquivalenceStatus::equivalent_with_witness: return "equivalent-with-witness";
    case EquivalenceStatus::distinct_orbits_at_minimum: return "distinct-orbits-at-minimum";
    case EquivalenceStatus::inconclusive_budget_exhausted: return "inconclusive-budget-exhausted";
  }
  return "?";
}

std::optional<MoveSite> move_between(const GaussCode& from, const CanonicalCode& to,
                                     std::size_t budget) {
  const auto fd = trace_faces(from);
  for (const auto& site : enumerate_all(from, fd, budget)) {
    const auto next = apply_enumerated(from, site);
    if (next.crossing_count() != to.code().crossing_count()) continue;
    if (canonical_form(next) == to) return site;
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint32_t kNoParent = ~std::uint32_t{0};

// Visited set for one direction. Texts live in a deque so the string_view
// keys stay valid.
struct Side {
  std::deque<std::string> texts;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> depth;
  std::unordered_map<std::string_view, std::uint32_t> index;
  std::vector<std::uint32_t> frontier;
  std::uint32_t level = 0;

  explicit Side(const CanonicalCode& root) { add(root.text(), kNoParent, 0); frontier = {0}; }

  std::pair<std::uint32_t, bool> add(const std::string& text, std::uint32_t from, std::uint32_t d) {
    auto it = index.find(text);
    if (it != index.end()) return {it->second, false};
    const auto id = static_cast<std::uint32_t>(texts.size());
    texts.push_back(text);
    parent.push_back(from);
    depth.push_back(d);
    index.emplace(texts.back(), id);
    return {id, true};
  }

  std::optional<std::uint32_t> find(const std::string& text) const {
    auto it = index.find(text);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // Node ids from the root to `id`.
  std::vector<std::uint32_t> path(std::uint32_t id) const {
    std::vector<std::uint32_t> out;
    for (; id != kNoParent; id = parent[id]) out.push_back(id);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

std::vector<std::string> neighbor_texts(const std::string& text, std::size_t budget) {
  const auto code = parse_code(text);
  const auto fd = trace_faces(code);
  std::vector<std::string> out;
  for (const auto& site : enumerate_all(code, fd, budget)) {
    out.push_back(canonical_text(apply_enumerated(code, site)));
  }
  return out;
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct Meet {
  std::size_t length;
  std::string text;
  std::uint32_t a_id;
  std::uint32_t b_id;
  bool operator<(const Meet& o) const {
    return std::tie(length, text) < std::tie(o.length, o.text);
  }
};

std::vector<MoveSite> witness_along(const std::vector<std::string>& texts, std::size_t budget) {
  std::vector<MoveSite> out;
  for (std::size_t i = 0; i + 1 < texts.size(); ++i) {
    const auto target = canonical_form(parse_code(texts[i + 1]));
    auto site = move_between(parse_code(texts[i]), target, budget);
    if (!site) throw std::logic_error("move graph is not symmetric at " + texts[i]);
    out.push_back(*site);
  }
  return out;
}

}  // namespace

EquivalenceVerdict equivalent_bounded(const GaussCode& a, const GaussCode& b,
                                      const EquivalenceLimits& limits) {
  EquivalenceVerdict v{EquivalenceStatus::inconclusive_budget_exhausted,
                       canonical_form(a), canonical_form(b), {}, limits.budget, 0, 0, {}, {}};
  if (limits.budget < std::max(a.crossing_count(), b.crossing_count())) {
    throw ValidationError("budget is below the crossing count of an input");
  }
  if (v.from == v.to) {
    v.status = EquivalenceStatus::equivalent_with_witness;
    v.stop_reason = "identical";
    v.states_explored = 1;
    return v;
  }

  // Reduced representatives: certify distinctness when the uniqueness
  // theorem for connected non-parallel strings applies.
  std::optional<Reduction> red_a, red_b;
  std::optional<OrbitSummary> orbit_a, orbit_b;
  try {
    red_a = reduce_monotone(a, limits.orbit_cap);
    red_b = reduce_monotone(b, limits.orbit_cap);
    if (red_a->complete && red_b->complete) {
      orbit_a = type3_orbit(red_a->code, limits.orbit_cap);
      orbit_b = type3_orbit(red_b->code, limits.orbit_cap);
    }
  } catch (const InconclusiveError&) {
  }
  if (orbit_a && orbit_b && orbit_a->exhausted && orbit_b->exhausted &&
      !orbit_a->contains(orbit_b->members.front())) {
    try {
      const auto ca = classify(a, limits.orbit_cap);
      const auto cb = classify(b, limits.orbit_cap);
      if (connected_nonparallel(ca) && connected_nonparallel(cb)) {
        v.status = EquivalenceStatus::distinct_orbits_at_minimum;
        v.stop_reason = "certified";
        v.caveats.push_back(
            "distinctness relies on both inputs being connected and non-parallel; "
            "non-parallelism was checked heuristically (no parallel flag raised)");
        return v;
      }
      v.caveats.push_back(
          "reduced Type 3 orbits are disjoint but an input is not certified connected "
          "non-parallel, so disjoint orbits do not imply distinct classes");
    } catch (const InconclusiveError&) {
    }
  }

  const auto start = Clock::now();
  auto out_of_time = [&] {
    return limits.time_limit.count() > 0 && Clock::now() - start >= limits.time_limit;
  };

  Side sa(v.from), sb(v.to);
  std::optional<Meet> best;
  while (true) {
    if (sa.frontier.empty() || sb.frontier.empty()) {
      v.stop_reason = "move graph exhausted within budget";
      break;
    }
    if (sa.level + sb.level >= limits.max_depth) {
      v.stop_reason = "depth limit";
      break;
    }
    if (sa.texts.size() + sb.texts.size() >= limits.max_states) {
      v.stop_reason = "state limit";
      break;
    }
    if (out_of_time()) {
      v.stop_reason = "time limit";
      break;
    }
    const bool expand_a = sa.frontier.size() <= sb.frontier.size();
    Side& self = expand_a ? sa : sb;
    Side& other = expand_a ? sb : sa;

    std::vector<std::vector<std::string>> neighbors(self.frontier.size());
    std::atomic<bool> timed_out{false};
    parallel_for(self.frontier.size(), limits.threads, [&](std::size_t i) {
      if (timed_out.load(std::memory_order_relaxed)) return;
      if ((i & 63) == 0 && out_of_time()) {
        timed_out = true;
        return;
      }
      neighbors[i] = neighbor_texts(self.texts[self.frontier[i]], limits.budget);
    });
    if (timed_out) {
      v.stop_reason = "time limit";
      break;
    }

    std::vector<std::uint32_t> next;
    std::vector<Meet> meets;
    for (std::size_t i = 0; i < self.frontier.size(); ++i) {
      const auto from = self.frontier[i];
      for (const auto& text : neighbors[i]) {
        auto [id, fresh] = self.add(text, from, self.level + 1);
        if (!fresh) continue;
        next.push_back(id);
        if (auto hit = other.find(text)) {
          const std::size_t len = self.level + 1 + other.depth[*hit];
          meets.push_back(expand_a ? Meet{len, text, id, *hit} : Meet{len, text, *hit, id});
        }
      }
    }
    self.frontier = std::move(next);
    ++self.level;
    if (!meets.empty()) {
      best = *std::min_element(meets.begin(), meets.end());
      v.stop_reason = "met";
      break;
    }
  }
  v.states_explored = sa.texts.size() + sb.texts.size();
  v.depth_explored = sa.level + sb.level;

  if (best) {
    std::vector<std::string> texts;
    for (auto id : sa.path(best->a_id)) texts.push_back(sa.texts[id]);
    auto back = sb.path(best->b_id);
    // sb's path runs from b to the meeting node; walk it backwards, skipping
    // the meeting node already present.
    for (auto it = back.rbegin() + 1; it != back.rend(); ++it) texts.push_back(sb.texts[*it]);
    v.witness = witness_along(texts, limits.budget);
    v.status = EquivalenceStatus::equivalent_with_witness;
    return v;
  }

  if (orbit_a && orbit_b && orbit_a->exhausted && orbit_a->contains(orbit_b->members.front())) {
    // Down along a's trace, across the shared orbit, up along b's trace reversed.
    std::vector<std::string> texts;
    texts.push_back(red_a->trace.initial.text());
    for (const auto& s : red_a->trace.steps) texts.push_back(s.after.text());
    {
      // Shortest R3 path between the two reduced codes inside the orbit.
      const auto& members = orbit_a->members;
      const auto goal = red_b->trace.final_code();
      std::vector<std::vector<std::size_t>> adj(members.size());
      for (auto [x, y] : orbit_a->adjacency) {
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
      const auto src = static_cast<std::size_t>(
          std::lower_bound(members.begin(), members.end(), red_a->trace.final_code()) -
          members.begin());
      const auto dst = static_cast<std::size_t>(
          std::lower_bound(members.begin(), members.end(), goal) - members.begin());
      std::vector<std::size_t> prev(members.size(), members.size());
      std::deque<std::size_t> q{src};
      prev[src] = src;
      while (!q.empty()) {
        const auto x = q.front();
        q.pop_front();
        for (auto y : adj[x]) {
          if (prev[y] != members.size()) continue;
          prev[y] = x;
          q.push_back(y);
        }
      }
      std::vector<std::size_t> chain;
      for (auto x = dst; x != src; x = prev[x]) chain.push_back(x);
      std::reverse(chain.begin(), chain.end());
      for (auto x : chain) texts.push_back(members[x].text());
    }
    for (auto it = red_b->trace.steps.rbegin(); it != red_b->trace.steps.rend(); ++it) {
      if (std::next(it) == red_b->trace.steps.rend()) {
        texts.push_back(red_b->trace.initial.text());
      } else {
        texts.push_back(std::next(it)->after.text());
      }
    }
    v.witness = witness_along(texts, limits.budget);
    v.status = EquivalenceStatus::equivalent_with_witness;
    v.stop_reason = "reduction orbits meet";
    return v;
  }

  v.caveats.push_back("no witness within the limits; this is not evidence of distinctness");
  return v;
}

}  // namespace flatstring
