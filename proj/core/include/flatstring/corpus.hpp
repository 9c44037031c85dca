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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatstring/gauss_code.hpp"

namespace flatstring {

struct Expectation {
  std::optional<long> genus;
  std::optional<std::size_t> crossings;
  std::optional<bool> irreducible;
  std::optional<std::size_t> orbit_size;
  std::optional<bool> connected;
};

struct CorpusEntry {
  std::string name;
  std::string code_text;
  Expectation expected;
  std::string note;

  GaussCode code() const { return parse_code(code_text); }
};

/// Corpus format, one item per line:
///
///   # comment
///   name: <gauss code>
///   expect: genus=1 crossings=1 irreducible=true orbit=1 connected=true
///   note: free text
///
/// `expect:` and `note:` lines attach to the preceding entry.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

/// The corpus shipped with the library.
std::string_view builtin_corpus_text();
const std::vector<CorpusEntry>& builtin_corpus();
const CorpusEntry& builtin_entry(std::string_view name);

struct CorpusMismatch {
  std::string entry;
  std::string field;
  std::string expected;
  std::string actual;
};

/// Recomputes every expected value. An orbit that hits `cap` is a mismatch.
std::vector<CorpusMismatch> check_corpus(const std::vector<CorpusEntry>& entries,
                                         std::size_t cap = 10000);

}  // namespace flatstring
