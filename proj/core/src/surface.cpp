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

#include "flatstring/surface.hpp"

#include <numeric>

namespace flatstring {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Half-edges are numbered 2p (leaving passage p forward) and 2p+1 (leaving
// passage p backward, i.e. along the incoming edge), p a global passage index.
struct HalfEdges {
  std::vector<std::uint32_t> offset;  // first global passage of each component
  std::vector<std::uint32_t> alpha;   // other end of the same edge
  std::vector<std::uint32_t> sigma;   // next half-edge counterclockwise at the crossing
  std::vector<std::uint32_t> component_of;  // per global passage

  explicit HalfEdges(const GaussCode& code) {
    std::uint32_t total = 0;
    for (const auto& w : code.components()) {
      offset.push_back(total);
      total += static_cast<std::uint32_t>(w.size());
    }
    alpha.resize(2 * total);
    sigma.resize(2 * total);
    component_of.resize(total);
    for (std::uint32_t ci = 0; ci < code.component_count(); ++ci) {
      const auto m = static_cast<std::uint32_t>(code.component(ci).size());
      for (std::uint32_t pi = 0; pi < m; ++pi) {
        component_of[offset[ci] + pi] = ci;
        const std::uint32_t p = offset[ci] + pi;
        const std::uint32_t q = offset[ci] + (pi + 1) % m;
        alpha[2 * p] = 2 * q + 1;
        alpha[2 * q + 1] = 2 * p;
      }
    }
    for (CrossingId c = 0; c < code.crossing_count(); ++c) {
      const auto t = global(code.tail_of(c));
      const auto h = global(code.head_of(c));
      const std::uint32_t ring[4] = {2 * t, 2 * h, 2 * t + 1, 2 * h + 1};
      for (int i = 0; i < 4; ++i) sigma[ring[i]] = ring[(i + 1) % 4];
    }
  }

  std::uint32_t global(PassageIndex p) const { return offset[p.component] + p.position; }
};

}  // namespace

std::size_t FaceDecomposition::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.vertices;
  return n;
}

std::size_t FaceDecomposition::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.edges;
  return n;
}

std::vector<std::vector<std::uint32_t>> diagram_components(const GaussCode& code) {
  UnionFind uf(code.component_count());
  for (CrossingId c = 0; c < code.crossing_count(); ++c) {
    uf.unite(code.tail_of(c).component, code.head_of(c).component);
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::int64_t> slot(code.component_count(), -1);
  for (std::uint32_t ci = 0; ci < code.component_count(); ++ci) {
    const auto root = uf.find(ci);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(ci);
  }
  return out;
}

FaceDecomposition trace_faces(const GaussCode& code) {
  FaceDecomposition fd;
  const auto parts = diagram_components(code);
  fd.group_of_component.assign(code.component_count(), 0);
  for (std::uint32_t g = 0; g < parts.size(); ++g) {
    DiagramGroup group;
    group.components = parts[g];
    for (auto ci : parts[g]) {
      fd.group_of_component[ci] = g;
      group.edges += code.component(ci).size();
    }
    // Each crossing has two passages in this group.
    group.vertices = group.edges / 2;
    fd.groups.push_back(std::move(group));
  }

  const HalfEdges he(code);
  auto to_dart = [&](std::uint32_t h) {
    const std::uint32_t p = h / 2;
    const std::uint32_t ci = he.component_of[p];
    const auto m = static_cast<std::uint32_t>(code.component(ci).size());
    const std::uint32_t pi = p - he.offset[ci];
    if (h % 2 == 0) return Dart{ci, pi, true};
    return Dart{ci, (pi + m - 1) % m, false};
  };

  std::vector<bool> seen(he.alpha.size(), false);
  for (std::uint32_t ci = 0; ci < code.component_count(); ++ci) {
    const auto g = fd.group_of_component[ci];
    const auto m = static_cast<std::uint32_t>(code.component(ci).size());
    if (m == 0) {
      for (bool fwd : {true, false}) {
        fd.faces.push_back(Face{{Dart{ci, 0, fwd}}, g, true});
      }
      fd.groups[g].faces += 2;
      continue;
    }
    for (std::uint32_t k = 0; k < 2 * m; ++k) {
      const std::uint32_t start = 2 * he.offset[ci] + k;
      if (seen[start]) continue;
      Face face;
      face.group = g;
      for (std::uint32_t h = start; !seen[h]; h = he.sigma[he.alpha[h]]) {
        seen[h] = true;
        face.boundary.push_back(to_dart(h));
      }
      fd.faces.push_back(std::move(face));
      fd.groups[g].faces += 1;
    }
  }
  return fd;
}

SurfaceReport surface_report(const FaceDecomposition& fd) {
  SurfaceReport r;
  for (const auto& g : fd.groups) {
    r.genus_per_component.push_back(g.genus());
    r.genus_total += g.genus();
  }
  r.component_count = fd.groups.size();
  r.connected = fd.groups.size() == 1;
  return r;
}

SurfaceReport carter_genus(const GaussCode& code) { return surface_report(trace_faces(code)); }

CrossingId dart_start_crossing(const GaussCode& code, const Dart& dart) {
  const auto& word = code.component(dart.component);
  const auto m = word.size();
  return dart.forward ? word[dart.edge].crossing : word[(dart.edge + 1) % m].crossing;
}

CrossingId dart_end_crossing(const GaussCode& code, const Dart& dart) {
  const auto& word = code.component(dart.component);
  const auto m = word.size();
  return dart.forward ? word[(dart.edge + 1) % m].crossing : word[dart.edge].crossing;
}

}  // namespace flatstring
