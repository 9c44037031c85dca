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

#include <json.hpp>
#include <string>

#include "flatstring/canonical.hpp"
#include "flatstring/classify.hpp"
#include "flatstring/equivalence.hpp"
#include "flatstring/moves.hpp"
#include "flatstring/search.hpp"
#include "flatstring/surface.hpp"

namespace flatstring::cli {

using nlohmann::ordered_json;

inline constexpr const char* kSchema = "report_v1";

ordered_json to_json(const Dart& dart);
ordered_json to_json(const MoveSite& site);
ordered_json to_json(const FaceDecomposition& faces);
ordered_json to_json(const SurfaceReport& report);
ordered_json to_json(const OrbitSummary& orbit);
ordered_json to_json(const ReductionTrace& trace);
ordered_json to_json(const ClassReport& report);
ordered_json to_json(const EquivalenceVerdict& verdict);

/// Input echo: the text as given and its canonical form.
ordered_json input_json(const std::string& text, const GaussCode& code);

}  // namespace flatstring::cli
