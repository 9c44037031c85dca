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

#include "report.hpp"

namespace flatstring::cli {

ordered_json to_json(const Dart& dart) {
  return {{"component", dart.component}, {"edge", dart.edge}, {"forward", dart.forward}};
}

ordered_json to_json(const MoveSite& site) {
  ordered_json darts = ordered_json::array();
  for (const auto& d : site.darts) darts.push_back(to_json(d));
  ordered_json j = {{"kind", to_string(site.kind)}};
  j["face"] = site.face == kNoFace ? ordered_json(nullptr) : ordered_json(site.face);
  j["darts"] = std::move(darts);
  j["tail_first"] = site.tail_first;
  j["text"] = describe(site);
  return j;
}

ordered_json to_json(const FaceDecomposition& faces) {
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < faces.faces.size(); ++i) {
    const auto& f = faces.faces[i];
    ordered_json darts = ordered_json::array();
    for (const auto& d : f.boundary) darts.push_back(to_json(d));
    list.push_back({{"index", i},
                    {"degree", f.degree()},
                    {"group", f.group},
                    {"free_loop", f.free_loop},
                    {"boundary", std::move(darts)}});
  }
  ordered_json groups = ordered_json::array();
  for (const auto& g : faces.groups) {
    groups.push_back({{"components", g.components},
                      {"vertices", g.vertices},
                      {"edges", g.edges},
                      {"faces", g.faces},
                      {"euler_characteristic", g.euler_characteristic()},
                      {"genus", g.genus()}});
  }
  return {{"vertices", faces.vertex_count()},
          {"edges", faces.edge_count()},
          {"faces", std::move(list)},
          {"groups", std::move(groups)}};
}

ordered_json to_json(const SurfaceReport& report) {
  return {{"genus_total", report.genus_total},
          {"genus_per_component", report.genus_per_component},
          {"surface_components", report.component_count},
          {"connected", report.connected}};
}

ordered_json to_json(const OrbitSummary& orbit) {
  ordered_json members = ordered_json::array();
  for (const auto& m : orbit.members) members.push_back(m.text());
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : orbit.adjacency) edges.push_back({a, b});
  return {{"size", orbit.members.size()},
          {"exhausted", orbit.exhausted},
          {"crossings", orbit.crossings},
          {"genus", orbit.genus},
          {"members", std::move(members)},
          {"adjacency", std::move(edges)}};
}

ordered_json to_json(const ReductionTrace& trace) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"move", to_json(s.move)},
                     {"crossings_after", s.crossings_after},
                     {"genus_after", s.genus_after},
                     {"after", s.after.text()}});
  }
  return {{"initial", trace.initial.text()},
          {"final", trace.final_code().text()},
          {"steps", std::move(steps)}};
}

ordered_json to_json(const ClassReport& report) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : report.parallel.pairs) {
    pairs.push_back({{"components", {p.first, p.second}}, {"level", to_string(p.level)}});
  }
  return {{"connected_class", report.connected_class},
          {"parallel_flag", to_string(report.parallel.overall)},
          {"parallel_pairs", std::move(pairs)},
          {"connected_nonparallel", connected_nonparallel(report)},
          {"reduced_code", report.reduced_code.text()}};
}

ordered_json to_json(const EquivalenceVerdict& verdict) {
  ordered_json witness = ordered_json::array();
  for (const auto& m : verdict.witness) witness.push_back(to_json(m));
  return {{"status", to_string(verdict.status)},
          {"from", verdict.from.text()},
          {"to", verdict.to.text()},
          {"budget", verdict.budget},
          {"witness_length", verdict.witness.size()},
          {"witness", std::move(witness)},
          {"states_explored", verdict.states_explored},
          {"depth_explored", verdict.depth_explored},
          {"stop_reason", verdict.stop_reason}};
}

ordered_json input_json(const std::string& text, const GaussCode& code) {
  return {{"text", text}, {"canonical", canonical_text(code)}};
}

}  // namespace flatstring::cli
