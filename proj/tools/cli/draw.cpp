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

#include "draw.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace flatstring::cli {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f4e9c", "#b22222", "#2e8b57",
                                                 "#8b6914", "#6a3d9a", "#d2691e"};

const char* color(std::size_t i) { return kPalette[i % kPalette.size()]; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string to_dot(const GaussCode& code) {
  std::ostringstream os;
  os << "digraph flatstring {\n  node [shape=circle fontsize=10];\n";
  for (CrossingId c = 0; c < code.crossing_count(); ++c) {
    os << "  x" << c << " [label=" << quoted(code.label(c) + (code.sign(c) > 0 ? "+" : "-"))
       << "];\n";
  }
  for (std::size_t ci = 0; ci < code.component_count(); ++ci) {
    const auto& word = code.component(ci);
    if (word.empty()) {
      os << "  loop" << ci << " [shape=point];\n";
      os << "  loop" << ci << " -> loop" << ci << " [color=" << quoted(color(ci)) << "];\n";
      continue;
    }
    for (std::size_t k = 0; k < word.size(); ++k) {
      const auto& next = word[(k + 1) % word.size()];
      os << "  x" << word[k].crossing << " -> x" << next.crossing << " [color="
         << quoted(color(ci)) << " label=" << quoted(std::to_string(ci) + ":" + std::to_string(k))
         << " fontsize=8];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_svg(const GaussCode& code) {
  constexpr double radius = 80;
  constexpr double gap = 220;
  constexpr double margin = 40;
  const auto n = std::max<std::size_t>(code.component_count(), 1);
  const double width = 2 * margin + 2 * radius + gap * static_cast<double>(n - 1);
  const double height = 2 * margin + 2 * radius;
  const double cy = margin + radius;

  struct Point {
    double x, y;
  };
  auto center_x = [&](std::size_t ci) { return margin + radius + gap * static_cast<double>(ci); };
  auto where = [&](PassageIndex p) {
    const auto size = code.component(p.component).size();
    const double t = 2 * std::numbers::pi * static_cast<double>(p.position) /
                     static_cast<double>(size);
    // Counterclockwise from the top.
    return Point{center_x(p.component) - radius * std::sin(t), cy - radius * std::cos(t)};
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/>"
        "</marker></defs>\n";
  for (std::size_t ci = 0; ci < code.component_count(); ++ci) {
    const double x = center_x(ci);
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(cy) << "\" r=\"" << num(radius)
       << "\" fill=\"none\" stroke=\"" << color(ci) << "\" stroke-width=\"2\"/>\n";
    // Orientation tick at the top, pointing counterclockwise.
    os << "<line x1=\"" << num(x + 1) << "\" y1=\"" << num(cy - radius) << "\" x2=\"" << num(x - 1)
       << "\" y2=\"" << num(cy - radius) << "\" stroke=\"" << color(ci)
       << "\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (CrossingId c = 0; c < code.crossing_count(); ++c) {
    const auto a = where(code.tail_of(c));
    const auto b = where(code.head_of(c));
    const bool positive = code.sign(c) > 0;
    os << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
       << "\" y2=\"" << num(b.y) << "\" stroke=\"black\""
       << (positive ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
    os << "<text x=\"" << num(a.x + 4) << "\" y=\"" << num(a.y - 4)
       << "\" font-size=\"11\" font-family=\"monospace\">" << code.label(c)
       << (positive ? "+" : "-") << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace flatstring::cli
