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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sgp/gradual.hpp"
#include "sgp/ingest.hpp"
#include "sgp/types.hpp"

namespace sgp {

struct MsgpOptions {
    RunOptions runs;
    /// Absolute per-sequence support; overrides the theta conversion when set.
    std::optional<std::size_t> min_sup_abs;
    /// Keep only seasons forming one interval modulo the cycle.
    bool contiguous_only = false;
    /// Report every frequent season, not only the maximal ones per item set.
    bool all_seasons = false;
    std::size_t min_items = 1;
    /// Drop a pattern whose item set is contained in an already emitted one.
    bool prune_subsumed = false;
    unsigned threads = 1;
};

/// A set of gradual items that all vary over the same season.
struct SeasonalGradualPattern {
    std::vector<GradualItem> items;            // canonical order
    std::vector<PeriodLabel> season;           // ascending
    double support = 0.0;                      // min(per_item_support) / m
    std::vector<std::size_t> per_item_support; // aligned with items

    bool operator==(const SeasonalGradualPattern&) const = default;
};

/// ceil(theta * m), never below 1. Throws std::invalid_argument unless 0 < theta <= 1.
std::size_t min_sup_for(double theta, std::size_t num_cycles);

struct SeasonalResult {
    GammaDatabase gamma;
    std::size_t min_sup = 0;
    std::vector<SeasonalGradualPattern> patterns;
    Diagnostics diagnostics;
};

/// Full pipeline: transform, mine periodic patterns with minRa = 1/|Gamma|, map
/// each mined season X to the pattern cover(X), then filter per `options`.
SeasonalResult mine_seasonal_detailed(const TemporalSequenceDatabase& db, double theta,
                                      const MsgpOptions& options = {});

std::vector<SeasonalGradualPattern> mine_seasonal(const TemporalSequenceDatabase& db, double theta,
                                                  const MsgpOptions& options = {});

/// Same, starting from an already built Gamma.
std::vector<SeasonalGradualPattern> mine_seasonal(const GammaDatabase& gamma, std::size_t min_sup,
                                                  const MsgpOptions& options = {});

/// min over items of the number of runs containing `season`, divided by m.
/// Throws std::invalid_argument if an item has no entry in gamma.
double seasonal_support(std::span<const GradualItem> items, std::span<const PeriodLabel> season,
                        const GammaDatabase& gamma, std::size_t num_cycles);

struct CountReport {
    std::size_t n_patterns = 0;     // distinct item sets
    std::size_t n_seasonality = 0;  // distinct (item set, season) pairs

    bool operator==(const CountReport&) const = default;
};

CountReport count_report(std::span<const SeasonalGradualPattern> patterns);

}  // namespace sgp
