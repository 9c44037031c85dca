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

#include "flatstring/gauss_code.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "flatstring/errors.hpp"

namespace flatstring {

namespace {

constexpr std::uint32_t kUnset = ~std::uint32_t{0};

}  // namespace

GaussCode::GaussCode() : components_(1) {}

GaussCode::GaussCode(std::vector<Component> components, std::vector<std::string> labels)
    : components_(std::move(components)), labels_(std::move(labels)) {
  if (components_.empty()) throw ValidationError("a code needs at least one component");
  const std::size_t k = labels_.size();
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!is_valid_label(l)) throw ValidationError("invalid crossing label '" + l + "'");
    if (!seen.insert(l).second) throw ValidationError("duplicate crossing label '" + l + "'");
  }
  tails_.assign(k, PassageIndex{kUnset, kUnset});
  heads_.assign(k, PassageIndex{kUnset, kUnset});
  for (std::uint32_t ci = 0; ci < components_.size(); ++ci) {
    const auto& word = components_[ci];
    for (std::uint32_t pi = 0; pi < word.size(); ++pi) {
      const Passage& p = word[pi];
      if (p.crossing >= k) throw ValidationError("passage references unknown crossing");
      auto& slot = p.tail ? tails_[p.crossing] : heads_[p.crossing];
      if (slot.component != kUnset) {
        throw ValidationError("crossing '" + labels_[p.crossing] +
                              "' must appear exactly twice with opposite roles");
      }
      slot = {ci, pi};
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (tails_[c].component == kUnset || heads_[c].component == kUnset) {
      throw ValidationError("crossing '" + labels_[c] + "' must appear exactly twice");
    }
  }
}

PassageIndex GaussCode::first_of(CrossingId c) const {
  return std::min(tails_.at(c), heads_.at(c));
}

PassageIndex GaussCode::second_of(CrossingId c) const {
  return std::max(tails_.at(c), heads_.at(c));
}

int GaussCode::sign(CrossingId c) const { return tails_.at(c) < heads_.at(c) ? 1 : -1; }

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
  });
}

namespace {

struct RawPassage {
  std::string label;
  char sign;
  std::size_t offset;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  std::vector<std::vector<RawPassage>> run() {
    std::vector<std::vector<RawPassage>> comps;
    comps.push_back(component());
    while (pos_ < text_.size()) {
      expect(" / ");
      comps.push_back(component());
    }
    return comps;
  }

 private:
  std::vector<RawPassage> component() {
    std::vector<RawPassage> word;
    if (text_.substr(pos_, 2) == "()") {
      pos_ += 2;
      return word;
    }
    word.push_back(passage());
    // A single space continues the component; " / " ends it.
    while (pos_ < text_.size() && text_[pos_] == ' ' && text_.substr(pos_, 3) != " / ") {
      ++pos_;
      word.push_back(passage());
    }
    return word;
  }

  RawPassage passage() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a crossing label");
    if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) {
      fail("expected '+' or '-' after label");
    }
    RawPassage p{std::string(text_.substr(start, pos_ - start)), text_[pos_], base_ + start};
    ++pos_;
    return p;
  }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

  static bool is_label_char(char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussCode parse_code(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  auto space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n'; };
  while (begin < end && space(text[begin])) ++begin;
  while (end > begin && space(text[end - 1])) --end;
  if (begin == end) throw ParseError("empty code string", begin);

  const auto raw = Parser(text.substr(begin, end - begin), begin).run();

  std::unordered_map<std::string, CrossingId> ids;
  std::vector<std::string> labels;
  std::vector<bool> first_is_tail;
  std::vector<int> count;
  std::vector<Component> comps;
  comps.reserve(raw.size());
  for (const auto& rword : raw) {
    Component word;
    word.reserve(rword.size());
    for (const auto& rp : rword) {
      auto [it, inserted] = ids.try_emplace(rp.label, static_cast<CrossingId>(labels.size()));
      const CrossingId c = it->second;
      if (inserted) {
        labels.push_back(rp.label);
        first_is_tail.push_back(rp.sign == '+');
        count.push_back(0);
      }
      if (++count[c] > 2) {
        throw ParseError("label '" + rp.label + "' appears more than twice", rp.offset);
      }
      if ((rp.sign == '+') != first_is_tail[c] && count[c] == 2) {
        throw ParseError("sign mismatch on label '" + rp.label + "'", rp.offset);
      }
      word.push_back(Passage{c, count[c] == 1 ? first_is_tail[c] : !first_is_tail[c]});
    }
    comps.push_back(std::move(word));
  }
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (count[c] != 2) {
      throw ParseError("label '" + labels[c] + "' appears only once", end);
    }
  }
  return GaussCode(std::move(comps), std::move(labels));
}

std::string serialize(const GaussCode& code) {
  std::string out;
  for (std::size_t ci = 0; ci < code.component_count(); ++ci) {
    if (ci > 0) out += " / ";
    const auto& word = code.component(ci);
    if (word.empty()) {
      out += "()";
      continue;
    }
    for (std::size_t pi = 0; pi < word.size(); ++pi) {
      if (pi > 0) out += ' ';
      out += code.label(word[pi].crossing);
      out += code.sign(word[pi].crossing) > 0 ? '+' : '-';
    }
  }
  return out;
}

GaussCode mirror(const GaussCode& code) {
  auto comps = code.components();
  for (auto& word : comps) {
    for (auto& p : word) p.tail = !p.tail;
  }
  return GaussCode(std::move(comps), code.labels());
}

GaussCode rotate_component(const GaussCode& code, std::size_t component, std::size_t shift) {
  auto comps = code.components();
  auto& word = comps.at(component);
  if (!word.empty()) {
    std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(shift % word.size()),
                word.end());
  }
  return GaussCode(std::move(comps), code.labels());
}

GaussCode permute_components(const GaussCode& code, const std::vector<std::size_t>& order) {
  if (order.size() != code.component_count()) {
    throw ValidationError("component permutation has the wrong length");
  }
  std::vector<Component> comps;
  comps.reserve(order.size());
  for (auto i : order) comps.push_back(code.component(i));
  return GaussCode(std::move(comps), code.labels());
}

GaussCode relabel(const GaussCode& code, std::vector<std::string> labels) {
  if (labels.size() != code.crossing_count()) {
    throw ValidationError("relabeling has the wrong number of labels");
  }
  return GaussCode(code.components(), std::move(labels));
}

GaussCode remove_crossings(const GaussCode& code, const std::vector<CrossingId>& crossings) {
  std::vector<bool> drop(code.crossing_count(), false);
  for (auto c : crossings) drop.at(c) = true;
  std::vector<CrossingId> remap(code.crossing_count(), 0);
  std::vector<std::string> labels;
  for (CrossingId c = 0; c < code.crossing_count(); ++c) {
    if (drop[c]) continue;
    remap[c] = static_cast<CrossingId>(labels.size());
    labels.push_back(code.label(c));
  }
  std::vector<Component> comps;
  comps.reserve(code.component_count());
  for (const auto& word : code.components()) {
    Component out;
    for (const auto& p : word) {
      if (!drop[p.crossing]) out.push_back(Passage{remap[p.crossing], p.tail});
    }
    comps.push_back(std::move(out));
  }
  return GaussCode(std::move(comps), std::move(labels));
}

std::string fresh_label(const GaussCode& code, const std::vector<std::string>& taken) {
  for (std::size_t n = 1;; ++n) {
    std::string candidate = "x" + std::to_string(n);
    const auto& ls = code.labels();
    if (std::find(ls.begin(), ls.end(), candidate) == ls.end() &&
        std::find(taken.begin(), taken.end(), candidate) == taken.end()) {
      return candidate;
    }
  }
}

}  // namespace flatstring
