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

#include <string>

#include "flatstring/gauss_code.hpp"

namespace flatstring::cli {

/// Graphviz digraph: one node per crossing, one edge per strand segment.
std::string to_dot(const GaussCode& code);

/// Chord diagram, one circle per component, chords joining the two passages
/// of each crossing.
std::string to_svg(const GaussCode& code);

}  // namespace flatstring::cli
