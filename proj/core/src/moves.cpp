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

#include "flatstring/moves.hpp"

#include <algorithm>
#include <set>

#include "flatstring/errors.hpp"

namespace flatstring {

int crossing_delta(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::r1_decrease: return -1;
    case MoveKind::r1_increase: return 1;
    case MoveKind::r2_decrease: return -2;
    case MoveKind::r2_increase: return 2;
    case MoveKind::r3: return 0;
  }
  return 0;
}

bool is_decreasing(MoveKind kind) noexcept {
  return kind == MoveKind::r1_decrease || kind == MoveKind::r2_decrease;
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::r1_decrease: return "R1-decrease";
    case MoveKind::r1_increase: return "R1-increase";
    case MoveKind::r2_decrease: return "R2-decrease";
    case MoveKind::r2_increase: return "R2-increase";
    case MoveKind::r3: return "R3";
  }
  return "?";
}

std::string describe(const MoveSite& site) {
  std::string out = to_string(site.kind);
  if (site.face != kNoFace) out += " face " + std::to_string(site.face);
  out += " [";
  for (std::size_t i = 0; i < site.darts.size(); ++i) {
    const auto& d = site.darts[i];
    if (i > 0) out += ' ';
    out += std::to_string(d.component) + ':' + std::to_string(d.edge) + (d.forward ? '>' : '<');
  }
  out += ']';
  if (site.kind == MoveKind::r1_increase) out += site.tail_first ? " +" : " -";
  return out;
}

namespace {

std::vector<CrossingId> face_crossings(const GaussCode& code, const Face& face) {
  std::vector<CrossingId> out;
  for (const auto& d : face.boundary) out.push_back(dart_start_crossing(code, d));
  return out;
}

bool pairwise_distinct(std::vector<CrossingId> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

std::size_t edge_slots(const GaussCode& code, std::uint32_t component) {
  return std::max<std::size_t>(1, code.component(component).size());
}

bool same_edge(const Dart& a, const Dart& b) {
  return a.component == b.component && a.edge == b.edge;
}

void sort_sites(std::vector<MoveSite>& sites) { std::sort(sites.begin(), sites.end()); }

}  // namespace

std::vector<MoveSite> enumerate_decreasing(const GaussCode& code, const FaceDecomposition& fd) {
  std::vector<MoveSite> out;
  std::set<std::vector<CrossingId>> removed;
  for (std::uint32_t f = 0; f < fd.faces.size(); ++f) {
    const Face& face = fd.faces[f];
    const auto deg = face.degree();
    if (deg != 1 && deg != 2) continue;
    auto xs = face_crossings(code, face);
    if (!pairwise_distinct(xs)) continue;
    std::sort(xs.begin(), xs.end());
    if (!removed.insert(xs).second) continue;
    out.push_back(MoveSite{deg == 1 ? MoveKind::r1_decrease : MoveKind::r2_decrease, f,
                           face.boundary, true});
  }
  sort_sites(out);
  return out;
}

std::vector<MoveSite> enumerate_decreasing(const GaussCode& code) {
  return enumerate_decreasing(code, trace_faces(code));
}

std::vector<MoveSite> enumerate_r3(const GaussCode& code, const FaceDecomposition& fd) {
  std::vector<MoveSite> out;
  for (std::uint32_t f = 0; f < fd.faces.size(); ++f) {
    const Face& face = fd.faces[f];
    if (face.degree() != 3 || !pairwise_distinct(face_crossings(code, face))) continue;
    out.push_back(MoveSite{MoveKind::r3, f, face.boundary, true});
  }
  sort_sites(out);
  return out;
}

std::vector<MoveSite> enumerate_r3(const GaussCode& code) {
  return enumerate_r3(code, trace_faces(code));
}

std::vector<MoveSite> enumerate_increasing(const GaussCode& code, const FaceDecomposition& fd,
                                           std::size_t budget) {
  std::vector<MoveSite> out;
  const std::size_t k = code.crossing_count();
  if (k + 1 <= budget) {
    for (std::uint32_t ci = 0; ci < code.component_count(); ++ci) {
      for (std::uint32_t e = 0; e < edge_slots(code, ci); ++e) {
        for (bool tail_first : {true, false}) {
          out.push_back(MoveSite{MoveKind::r1_increase, kNoFace, {Dart{ci, e, true}}, tail_first});
        }
      }
    }
  }
  if (k + 2 <= budget) {
    for (std::uint32_t f = 0; f < fd.faces.size(); ++f) {
      const auto& b = fd.faces[f].boundary;
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i; j < b.size(); ++j) {
          if (!same_edge(b[i], b[j])) {
            out.push_back(MoveSite{MoveKind::r2_increase, f, {b[i], b[j]}, true});
            continue;
          }
          // A strand pushed across itself: the finger's base may come before
          // or after the crossed point along the edge.
          for (bool base_first : {true, false}) {
            out.push_back(MoveSite{MoveKind::r2_increase, f, {b[i], b[j]}, base_first});
          }
        }
      }
    }
    // Different diagram components live on different carriers; a tube joins
    // any face of one to any face of the other without adding genus.
    for (std::size_t f1 = 0; f1 < fd.faces.size(); ++f1) {
      for (std::size_t f2 = 0; f2 < fd.faces.size(); ++f2) {
        if (fd.faces[f1].group >= fd.faces[f2].group) continue;
        for (const auto& d1 : fd.faces[f1].boundary) {
          for (const auto& d2 : fd.faces[f2].boundary) {
            out.push_back(MoveSite{MoveKind::r2_increase, kNoFace, {d1, d2}, true});
          }
        }
      }
    }
  }
  sort_sites(out);
  return out;
}

std::vector<MoveSite> enumerate_increasing(const GaussCode& code, std::size_t budget) {
  return enumerate_increasing(code, trace_faces(code), budget);
}

std::vector<MoveSite> enumerate_all(const GaussCode& code, const FaceDecomposition& fd,
                                    std::size_t budget) {
  auto out = enumerate_decreasing(code, fd);
  auto inc = enumerate_increasing(code, fd, budget);
  auto r3 = enumerate_r3(code, fd);
  out.insert(out.end(), inc.begin(), inc.end());
  out.insert(out.end(), r3.begin(), r3.end());
  sort_sites(out);
  return out;
}

std::vector<MoveSite> enumerate_all(const GaussCode& code, std::size_t budget) {
  return enumerate_all(code, trace_faces(code), budget);
}

namespace {

GaussCode apply_r3(const GaussCode& code, const MoveSite& site) {
  auto comps = code.components();
  // Sliding a strand across the opposite crossing reverses the order of the
  // two crossings along each side of the triangle; local orientations persist.
  for (const auto& d : site.darts) {
    auto& word = comps[d.component];
    std::swap(word[d.edge], word[(d.edge + 1) % word.size()]);
  }
  return GaussCode(std::move(comps), code.labels());
}

GaussCode apply_r1_increase(const GaussCode& code, const MoveSite& site) {
  auto comps = code.components();
  auto labels = code.labels();
  const auto x = static_cast<CrossingId>(labels.size());
  labels.push_back(fresh_label(code));
  const Dart& d = site.darts.front();
  auto& word = comps[d.component];
  const auto at = word.empty() ? word.begin() : word.begin() + d.edge + 1;
  word.insert(at, {Passage{x, site.tail_first}, Passage{x, !site.tail_first}});
  return GaussCode(std::move(comps), std::move(labels));
}

// Finger move of the first dart's strand across the second dart's strand,
// inside the face to the right of both darts. Drawing the face with the first
// dart on top heading east and the second on the bottom heading west, the
// finger dips south through the bottom strand at `west` and returns north at
// `east`.
GaussCode apply_r2_increase(const GaussCode& code, const MoveSite& site) {
  auto comps = code.components();
  auto labels = code.labels();
  const auto west = static_cast<CrossingId>(labels.size());
  const auto east = west + 1;
  labels.push_back(fresh_label(code));
  labels.push_back(fresh_label(code, {labels.back()}));

  const Dart& d1 = site.darts[0];
  const Dart& d2 = site.darts[1];
  const bool same_dir = d1.forward == d2.forward;
  // Along the pushed strand's orientation.
  std::vector<Passage> on_first = {Passage{west, !same_dir}, Passage{east, same_dir}};
  if (!d1.forward) std::reverse(on_first.begin(), on_first.end());
  std::vector<Passage> on_second = {Passage{east, !same_dir}, Passage{west, same_dir}};
  if (!d2.forward) std::reverse(on_second.begin(), on_second.end());

  auto insert_on = [&](const Dart& d, const std::vector<Passage>& ps) {
    auto& word = comps[d.component];
    const auto at = word.empty() ? word.begin() : word.begin() + d.edge + 1;
    word.insert(at, ps.begin(), ps.end());
  };
  if (same_edge(d1, d2)) {
    auto both = site.tail_first ? on_first : on_second;
    const auto& rest = site.tail_first ? on_second : on_first;
    both.insert(both.end(), rest.begin(), rest.end());
    insert_on(d1, both);
  } else if (d1.component == d2.component && d1.edge < d2.edge) {
    // Insert at the later position first so the earlier index stays valid.
    insert_on(d2, on_second);
    insert_on(d1, on_first);
  } else {
    insert_on(d1, on_first);
    insert_on(d2, on_second);
  }
  return GaussCode(std::move(comps), std::move(labels));
}

bool valid_dart(const GaussCode& code, const Dart& d) {
  return d.component < code.component_count() && d.edge < edge_slots(code, d.component);
}

void check_site(const GaussCode& code, const MoveSite& site) {
  auto stale = [&](const std::string& why) {
    throw StaleSiteError("stale " + describe(site) + ": " + why);
  };
  for (const auto& d : site.darts) {
    if (!valid_dart(code, d)) stale("dart out of range");
  }
  switch (site.kind) {
    case MoveKind::r1_increase:
      if (site.darts.size() != 1 || !site.darts[0].forward) stale("expects one forward dart");
      return;
    case MoveKind::r2_increase: {
      if (site.darts.size() != 2) stale("expects two darts");
      const auto fd = trace_faces(code);
      if (site.face == kNoFace) {
        if (same_edge(site.darts[0], site.darts[1]) ||
            fd.group_of_component[site.darts[0].component] ==
            fd.group_of_component[site.darts[1].component]) {
          stale("darts are in one diagram component but no face is given");
        }
        return;
      }
      if (site.face >= fd.faces.size()) stale("no such face");
      const auto& b = fd.faces[site.face].boundary;
      for (const auto& d : site.darts) {
        if (std::find(b.begin(), b.end(), d) == b.end()) stale("dart not on face");
      }
      return;
    }
    default: {
      const auto fd = trace_faces(code);
      const std::size_t want =
          site.kind == MoveKind::r1_decrease ? 1 : site.kind == MoveKind::r2_decrease ? 2 : 3;
      if (site.face >= fd.faces.size()) stale("no such face");
      const Face& face = fd.faces[site.face];
      if (face.degree() != want || face.boundary != site.darts) stale("face mismatch");
      if (!pairwise_distinct(face_crossings(code, face))) stale("repeated crossing on face");
    }
  }
}

}  // namespace

GaussCode apply_enumerated(const GaussCode& code, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::r1_decrease:
    case MoveKind::r2_decrease: {
      std::vector<CrossingId> xs;
      for (const auto& d : site.darts) xs.push_back(dart_start_crossing(code, d));
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      return remove_crossings(code, xs);
    }
    case MoveKind::r1_increase: return apply_r1_increase(code, site);
    case MoveKind::r2_increase: return apply_r2_increase(code, site);
    case MoveKind::r3: return apply_r3(code, site);
  }
  return code;
}

GaussCode apply_move(const GaussCode& code, const MoveSite& site) {
  check_site(code, site);
  return apply_enumerated(code, site);
}

}  // namespace flatstring
