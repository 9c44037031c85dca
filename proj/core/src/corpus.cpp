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

#include "flatstring/corpus.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "flatstring/errors.hpp"
#include "flatstring/search.hpp"
#include "flatstring/surface.hpp"

namespace flatstring {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

template <typename T>
T parse_number(std::string_view v, std::size_t line) {
  T out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    throw ValidationError("corpus line " + std::to_string(line) + ": bad number '" +
                         std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view v, std::size_t line) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ValidationError("corpus line " + std::to_string(line) + ": bad boolean '" + std::string(v) + "'");
}

void parse_expect(std::string_view body, Expectation& e, std::size_t line) {
  std::istringstream in{std::string(body)};
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("corpus line " + std::to_string(line) + ": expected key=value");
    }
    const std::string_view key(item.data(), eq);
    const std::string_view val(item.data() + eq + 1, item.size() - eq - 1);
    if (key == "genus") {
      e.genus = parse_number<long>(val, line);
    } else if (key == "crossings") {
      e.crossings = parse_number<std::size_t>(val, line);
    } else if (key == "irreducible") {
      e.irreducible = parse_bool(val, line);
    } else if (key == "orbit") {
      e.orbit_size = parse_number<std::size_t>(val, line);
    } else if (key == "connected") {
      e.connected = parse_bool(val, line);
    } else {
      throw ValidationError("corpus line " + std::to_string(line) + ": unknown key '" +
                           std::string(key) + "'");
    }
  }
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ValidationError("corpus line " + std::to_string(line_no) + ": missing ':'");
    }
    const auto key = trim(line.substr(0, colon));
    const auto body = trim(line.substr(colon + 1));
    if (key == "expect" || key == "note") {
      if (out.empty()) {
        throw ValidationError("corpus line " + std::to_string(line_no) + ": annotation before entry");
      }
      if (key == "expect") {
        parse_expect(body, out.back().expected, line_no);
      } else {
        if (!out.back().note.empty()) out.back().note += ' ';
        out.back().note += body;
      }
      continue;
    }
    for (const auto& e : out) {
      if (e.name == key) {
        throw ValidationError("corpus line " + std::to_string(line_no) + ": duplicate name");
      }
    }
    try {
      (void)parse_code(body);
    } catch (const ParseError& err) {
      throw ValidationError("corpus line " + std::to_string(line_no) + ": " + err.what());
    }
    out.push_back(CorpusEntry{std::string(key), std::string(body), {}, {}});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open corpus " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const auto entries = parse_corpus(builtin_corpus_text());
  return entries;
}

const CorpusEntry& builtin_entry(std::string_view name) {
  for (const auto& e : builtin_corpus()) {
    if (e.name == name) return e;
  }
  throw ValidationError("no corpus entry named " + std::string(name));
}

std::vector<CorpusMismatch> check_corpus(const std::vector<CorpusEntry>& entries,
                                         std::size_t cap) {
  std::vector<CorpusMismatch> out;
  auto bool_text = [](bool b) { return std::string(b ? "true" : "false"); };
  for (const auto& e : entries) {
    const auto code = e.code();
    const auto& x = e.expected;
    if (x.genus) {
      const auto g = carter_genus(code).genus_total;
      if (g != *x.genus) out.push_back({e.name, "genus", std::to_string(*x.genus), std::to_string(g)});
    }
    if (x.crossings && code.crossing_count() != *x.crossings) {
      out.push_back({e.name, "crossings", std::to_string(*x.crossings),
                     std::to_string(code.crossing_count())});
    }
    if (x.connected) {
      const bool c = diagram_components(code).size() <= 1;
      if (c != *x.connected) out.push_back({e.name, "connected", bool_text(*x.connected), bool_text(c)});
    }
    if (x.irreducible) {
      try {
        const bool irr = is_crossing_irreducible(code, cap).irreducible;
        if (irr != *x.irreducible) {
          out.push_back({e.name, "irreducible", bool_text(*x.irreducible), bool_text(irr)});
        }
      } catch (const InconclusiveError&) {
        out.push_back({e.name, "irreducible", bool_text(*x.irreducible), "inconclusive"});
      }
    }
    if (x.orbit_size) {
      const auto orbit = type3_orbit(code, cap);
      const auto actual = orbit.exhausted ? std::to_string(orbit.members.size()) : "inconclusive";
      if (actual != std::to_string(*x.orbit_size)) {
        out.push_back({e.name, "orbit", std::to_string(*x.orbit_size), actual});
      }
    }
  }
  return out;
}

}  // namespace flatstring
