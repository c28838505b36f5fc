/*
   Copyright 2026 The SGP Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

// JSON and text renderings of the engine's results, shared by the CLI and the
// Python module.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgp/baseline.hpp"
#include "sgp/gradual.hpp"
#include "sgp/msgp.hpp"
#include "sgp/periodic.hpp"

namespace sgp {

using Json = nlohmann::ordered_json;

Json item_to_json(const GradualItem& item, std::span<const std::string> attributes);

/// `[{"item":{"attribute":"age","direction":"up"},"runs":[["d1","d2","d3"],...]},...]`
Json gamma_to_json(const GammaDatabase& gamma);

/// Reads the array produced by gamma_to_json back as a sequence database whose
/// items are label indices and whose sids are item names ("age^+").
SequenceDatabase sequences_from_gamma_json(const Json& doc);

Json periodic_patterns_to_json(std::span<const PeriodicPattern> patterns, const SequenceDatabase& db);

/// `{"items":[...],"season":["d1","d2"],"support":1.0,"per_item_support":{"age^+":3}}`
Json seasonal_pattern_to_json(const SeasonalGradualPattern& pattern, std::span<const std::string> attributes);

Json temporal_pattern_to_json(const TemporalGradualPattern& pattern, std::span<const std::string> attributes);

std::string format_seasonal_table(std::span<const SeasonalGradualPattern> patterns,
                                  std::span<const std::string> attributes);

std::string format_temporal_table(std::span<const TemporalGradualPattern> patterns,
                                  std::span<const std::string> attributes);

}  // namespace sgp
