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

#include "flatstring/canonical.hpp"

#include <cstdint>
#include <utility>

namespace flatstring {

namespace {

// Depth-first search over (component order x rotations) that emits the
// serialization incrementally and prunes as soon as the partial string is
// larger than the best complete one. All candidates have the same length
// because every label keeps its digit count, so a prefix comparison is exact.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const GaussCode& code)
      : code_(code),
        used_(code.component_count(), false),
        new_label_(code.crossing_count(), kNone) {}

  std::pair<GaussCode, std::string> result() && {
    choice_.reserve(code_.component_count());
    recurse();
    return build();
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  struct Choice {
    std::size_t component;
    std::size_t rotation;
  };

  void recurse() {
    if (choice_.size() == code_.component_count()) {
      if (best_.empty() || less_) {
        best_ = buf_;
        best_choice_ = choice_;
        ++best_version_;
      }
      return;
    }
    for (std::size_t ci = 0; ci < code_.component_count(); ++ci) {
      if (used_[ci]) continue;
      const auto& word = code_.component(ci);
      const std::size_t rotations = word.empty() ? 1 : word.size();
      for (std::size_t r = 0; r < rotations; ++r) {
        const std::size_t mark = buf_.size();
        bool less_before = less_;
        const std::uint32_t next_before = next_;
        assigned_.clear();
        if (!choice_.empty()) buf_ += " / ";
        if (word.empty()) {
          buf_ += "()";
        } else {
          for (std::size_t k = 0; k < word.size(); ++k) {
            if (k > 0) buf_ += ' ';
            emit(word[(r + k) % word.size()]);
          }
        }
        if (compare_tail(mark)) {
          used_[ci] = true;
          choice_.push_back({ci, r});
          const auto local = assigned_;
          const std::size_t version = best_version_;
          recurse();
          // A new best extends the current prefix, so the prefix is no longer smaller.
          if (best_version_ != version) less_before = false;
          choice_.pop_back();
          used_[ci] = false;
          assigned_ = local;
        }
        for (auto c : assigned_) new_label_[c] = kNone;
        next_ = next_before;
        less_ = less_before;
        buf_.resize(mark);
      }
    }
  }

  void emit(const Passage& p) {
    if (new_label_[p.crossing] == kNone) {
      new_label_[p.crossing] = ++next_;
      assigned_.push_back(p.crossing);
      buf_ += std::to_string(next_);
      buf_ += p.tail ? '+' : '-';
    } else {
      buf_ += std::to_string(new_label_[p.crossing]);
      // Second occurrence: the text sign is + iff the first occurrence was the tail.
      buf_ += p.tail ? '-' : '+';
    }
  }

  // Returns false when the segment appended at `mark` makes buf_ larger than best_.
  bool compare_tail(std::size_t mark) {
    if (best_.empty() || less_) return true;
    for (std::size_t i = mark; i < buf_.size(); ++i) {
      if (buf_[i] < best_[i]) {
        less_ = true;
        return true;
      }
      if (buf_[i] > best_[i]) return false;
    }
    return true;
  }

  std::pair<GaussCode, std::string> build() const {
    std::vector<std::uint32_t> relabel(code_.crossing_count(), kNone);
    std::uint32_t next = 0;
    std::vector<Component> comps;
    comps.reserve(best_choice_.size());
    for (const auto& [ci, r] : best_choice_) {
      const auto& word = code_.component(ci);
      Component out;
      out.reserve(word.size());
      for (std::size_t k = 0; k < word.size(); ++k) {
        const Passage& p = word[(r + k) % word.size()];
        if (relabel[p.crossing] == kNone) relabel[p.crossing] = next++;
        out.push_back(Passage{relabel[p.crossing], p.tail});
      }
      comps.push_back(std::move(out));
    }
    std::vector<std::string> labels;
    labels.reserve(next);
    for (std::uint32_t i = 1; i <= next; ++i) labels.push_back(std::to_string(i));
    return {GaussCode(std::move(comps), std::move(labels)), best_};
  }

  const GaussCode& code_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> new_label_;
  std::vector<CrossingId> assigned_;
  std::vector<Choice> choice_;
  std::vector<Choice> best_choice_;
  std::string buf_;
  std::string best_;
  std::uint32_t next_ = 0;
  std::size_t best_version_ = 0;
  bool less_ = false;
};

}  // namespace

CanonicalCode canonical_form(const GaussCode& code) {
  auto [normal, text] = CanonicalSearch(code).result();
  return CanonicalCode(std::move(normal), std::move(text));
}

std::string canonical_text(const GaussCode& code) { return canonical_form(code).text(); }

}  // namespace flatstring
