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

// Temporal gradual patterns over the concatenated timeline: support is the
// fraction of consecutive observation couples along which every item of the
// pattern varies in its direction.

#include <cstddef>
#include <span>
#include <vector>

#include "sgp/gradual.hpp"
#include "sgp/ingest.hpp"
#include "sgp/types.hpp"

namespace sgp {

struct TemporalGradualPattern {
    std::vector<GradualItem> items;  // canonical order
    std::size_t count = 0;           // supporting couples
    double support = 0.0;

    bool operator==(const TemporalGradualPattern&) const = default;
};

/// Number of couples (t, t+1) considered: m*l - 1 with cross-boundary adjacency,
/// m*(l-1) without.
std::size_t num_couples(const TemporalSequenceDatabase& db, const RunOptions& adjacency);

/// Direct count of supporting couples for one pattern.
std::size_t temporal_count(const TemporalSequenceDatabase& db, std::span<const GradualItem> items,
                           const RunOptions& adjacency = {});

/// Levelwise Apriori over the 2n gradual items; patterns holding both directions
/// of one attribute are never generated. Output ordered by size, then canonically.
std::vector<TemporalGradualPattern> mine_temporal(const TemporalSequenceDatabase& db, double theta,
                                                  const RunOptions& adjacency = {});

}  // namespace sgp
