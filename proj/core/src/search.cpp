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

#include "flatstring/search.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "flatstring/errors.hpp"

namespace flatstring {

bool OrbitSummary::contains(const CanonicalCode& c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

namespace {

struct OrbitNode {
  CanonicalCode code;
  std::size_t parent;
  std::optional<MoveSite> via;  // R3 site on the parent's canonical code
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

// Breadth-first R3 closure. `stop` is consulted on each member in BFS order;
// exploration ends early when it returns true.
template <typename Stop>
struct OrbitWalk {
  std::vector<OrbitNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool exhausted = false;
  std::optional<std::size_t> stopped_at;

  OrbitWalk(const GaussCode& code, std::size_t cap, Stop stop) {
    std::unordered_map<std::string, std::size_t> index;
    nodes.push_back(OrbitNode{canonical_form(code), kRoot, std::nullopt});
    index.emplace(nodes[0].code.text(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const GaussCode current = nodes[i].code.code();
      const auto fd = trace_faces(current);
      if (stop(current, fd)) {
        stopped_at = i;
        return;
      }
      for (const auto& site : enumerate_r3(current, fd)) {
        auto next = canonical_form(apply_enumerated(current, site));
        auto it = index.find(next.text());
        if (it == index.end()) {
          if (nodes.size() >= cap) return;  // not exhausted
          it = index.emplace(next.text(), nodes.size()).first;
          nodes.push_back(OrbitNode{std::move(next), i, site});
        }
        if (it->second != i) edges.emplace_back(std::min(i, it->second), std::max(i, it->second));
      }
    }
    exhausted = true;
  }

  std::vector<MoveSite> path_to(std::size_t i) const {
    std::vector<MoveSite> path;
    for (; nodes[i].parent != kRoot; i = nodes[i].parent) path.push_back(*nodes[i].via);
    std::reverse(path.begin(), path.end());
    return path;
  }

  OrbitSummary summary() const {
    OrbitSummary s;
    std::vector<std::size_t> order(nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return nodes[a].code < nodes[b].code; });
    std::vector<std::size_t> rank(nodes.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
      rank[order[r]] = r;
      s.members.push_back(nodes[order[r]].code);
    }
    for (auto [a, b] : edges) {
      const auto ra = rank[a], rb = rank[b];
      s.adjacency.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    std::sort(s.adjacency.begin(), s.adjacency.end());
    s.adjacency.erase(std::unique(s.adjacency.begin(), s.adjacency.end()), s.adjacency.end());
    s.exhausted = exhausted;
    s.crossings = nodes[0].code.code().crossing_count();
    s.genus = carter_genus(nodes[0].code.code()).genus_total;
    return s;
  }
};

template <typename Stop>
OrbitWalk(const GaussCode&, std::size_t, Stop) -> OrbitWalk<Stop>;

}  // namespace

OrbitSummary type3_orbit(const GaussCode& code, std::size_t cap) {
  if (cap == 0) throw ValidationError("orbit cap must be at least 1");
  return OrbitWalk(code, cap, [](const GaussCode&, const FaceDecomposition&) { return false; })
      .summary();
}

IrreducibilityCertificate is_crossing_irreducible(const GaussCode& code, std::size_t cap) {
  std::optional<MoveSite> found;
  OrbitWalk walk(code, cap, [&](const GaussCode& member, const FaceDecomposition& fd) {
    auto dec = enumerate_decreasing(member, fd);
    if (dec.empty()) return false;
    found = dec.front();
    return true;
  });
  IrreducibilityCertificate cert;
  cert.orbit = walk.summary();
  if (walk.stopped_at) {
    cert.irreducible = false;
    cert.witness_member = walk.nodes[*walk.stopped_at].code;
    cert.witness_path = walk.path_to(*walk.stopped_at);
    cert.witness_site = found;
    return cert;
  }
  if (!walk.exhausted) {
    throw InconclusiveError("Type 3 orbit exceeded " + std::to_string(cap) +
                            " members without a decreasing move");
  }
  cert.irreducible = true;
  return cert;
}

Reduction reduce_monotone(const GaussCode& code, std::size_t cap) {
  Reduction out{code, ReductionTrace{canonical_form(code), {}}, false};
  CanonicalCode state = out.trace.initial;
  auto push = [&](const MoveSite& site) {
    const auto next = apply_enumerated(state.code(), site);
    state = canonical_form(next);
    out.trace.steps.push_back(TraceStep{site, state.code().crossing_count(),
                                        carter_genus(state.code()).genus_total, state});
  };
  while (true) {
    std::optional<MoveSite> found;
    OrbitWalk walk(state.code(), cap, [&](const GaussCode& member, const FaceDecomposition& fd) {
      auto dec = enumerate_decreasing(member, fd);
      if (dec.empty()) return false;
      found = dec.front();
      return true;
    });
    if (!walk.stopped_at) {
      out.complete = walk.exhausted;
      break;
    }
    for (const auto& site : walk.path_to(*walk.stopped_at)) push(site);
    push(*found);
  }
  out.code = state.code();
  return out;
}

CanonicalCode replay(const CanonicalCode& start, std::span<const MoveSite> moves) {
  CanonicalCode state = start;
  for (const auto& m : moves) state = canonical_form(apply_move(state.code(), m));
  return state;
}

ScrambleResult scramble(const GaussCode& code, std::uint64_t seed, std::size_t steps,
                        std::size_t budget) {
  std::mt19937_64 rng(seed);
  ScrambleResult r{code, 0, false};
  for (; r.steps_applied < steps; ++r.steps_applied) {
    const auto sites = enumerate_all(r.code, budget);
    if (sites.empty()) {
      r.stuck = true;
      break;
    }
    // Plain modulo keeps the draw identical across standard libraries.
    const auto pick = static_cast<std::size_t>(rng() % sites.size());
    r.code = apply_enumerated(r.code, sites[pick]);
  }
  return r;
}

}  // namespace flatstring
