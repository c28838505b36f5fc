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

#include "sgp/msgp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "sgp/periodic.hpp"

namespace sgp {

std::size_t min_sup_for(double theta, std::size_t num_cycles) {
    if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must lie in (0, 1]");
    const double scaled = theta * static_cast<double>(num_cycles);
    // Absorb representation error such as (2/3)*3 = 2.0000000000000004.
    const auto sup = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
    return std::max<std::size_t>(sup, 1);
}

namespace {

Itemset season_items(std::span<const PeriodLabel> season) {
    Itemset out;
    for (const auto& l : season) out.push_back(l.index);
    return normalize(out);
}

bool season_subset(const std::vector<PeriodLabel>& sub, const std::vector<PeriodLabel>& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool items_subset(const std::vector<GradualItem>& sub, const std::vector<GradualItem>& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// Drops (g, X) when some (g, X') with X strictly inside X' is also present.
std::vector<SeasonalGradualPattern> keep_maximal_seasons(std::vector<SeasonalGradualPattern> patterns,
                                                         std::size_t cycle_length) {
    const bool use_masks = cycle_length <= 64;
    std::vector<std::uint64_t> masks(patterns.size(), 0);
    if (use_masks) {
        for (std::size_t k = 0; k < patterns.size(); ++k) {
            for (const auto& l : patterns[k].season) masks[k] |= 1ULL << (l.index - 1);
        }
    }
    auto inside = [&](std::size_t a, std::size_t b) {
        if (patterns[a].season.size() >= patterns[b].season.size()) return false;
        return use_masks ? (masks[a] & ~masks[b]) == 0 : season_subset(patterns[a].season, patterns[b].season);
    };

    std::map<std::vector<GradualItem>, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < patterns.size(); ++k) groups[patterns[k].items].push_back(k);

    // Largest seasons first: a dominated season is always inside some maximal one.
    std::vector<bool> keep(patterns.size(), false);
    std::vector<std::size_t> maximal;
    for (auto& [items, members] : groups) {
        std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return patterns[a].season.size() > patterns[b].season.size();
        });
        maximal.clear();
        for (std::size_t a : members) {
            if (std::none_of(maximal.begin(), maximal.end(), [&](std::size_t b) { return inside(a, b); })) {
                maximal.push_back(a);
                keep[a] = true;
            }
        }
    }
    std::vector<SeasonalGradualPattern> out;
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        if (keep[k]) out.push_back(std::move(patterns[k]));
    }
    return out;
}

}  // namespace

std::vector<SeasonalGradualPattern> mine_seasonal(const GammaDatabase& gamma, std::size_t min_sup,
                                                  const MsgpOptions& options) {
    if (min_sup < 1) throw std::invalid_argument("min_sup must be at least 1");
    if (gamma.num_cycles == 0) throw std::invalid_argument("transformed database has no cycles");
    const SequenceDatabase sequences = gamma.to_sequences();
    if (sequences.empty()) return {};

    MinerOptions miner;
    miner.min_sup = min_sup;
    miner.min_ra = 1.0 / static_cast<double>(sequences.size());
    miner.threads = options.threads;
    auto mined = mine(sequences, miner);

    // Mined seasons are distinct, so every (items, season) pair below is too.
    std::vector<SeasonalGradualPattern> patterns;
    patterns.reserve(mined.size());
    std::vector<std::vector<GradualItem>> emitted;
    for (auto& p : mined) {
        if (options.contiguous_only && !is_cyclically_contiguous(p.itemset, gamma.cycle_length)) continue;

        SeasonalGradualPattern g;
        g.items.reserve(p.cover.size());
        g.season.reserve(p.itemset.size());
        for (std::size_t s : p.cover) g.items.push_back(gamma.entries[s].item);
        for (Item label : p.itemset) g.season.push_back(PeriodLabel{label});
        g.per_item_support = std::move(p.supports);
        const std::size_t weakest = *std::min_element(g.per_item_support.begin(), g.per_item_support.end());
        g.support = static_cast<double>(weakest) / static_cast<double>(gamma.num_cycles);

        if (options.prune_subsumed) {
            const bool subsumed = std::any_of(emitted.begin(), emitted.end(),
                                              [&](const auto& items) { return items_subset(g.items, items); });
            if (subsumed) continue;
            emitted.push_back(g.items);
        }
        patterns.push_back(std::move(g));
    }

    if (!options.all_seasons) patterns = keep_maximal_seasons(std::move(patterns), gamma.cycle_length);
    if (options.min_items > 1) {
        std::erase_if(patterns, [&](const SeasonalGradualPattern& g) { return g.items.size() < options.min_items; });
    }
    return patterns;
}

SeasonalResult mine_seasonal_detailed(const TemporalSequenceDatabase& db, double theta, const MsgpOptions& options) {
    SeasonalResult result;
    result.min_sup = min_sup_for(theta, db.num_cycles());
    if (options.min_sup_abs) {
        if (*options.min_sup_abs < 1) throw std::invalid_argument("absolute min_sup must be at least 1");
        result.min_sup = *options.min_sup_abs;
    }
    result.gamma = build_gamma(db, options.runs, &result.diagnostics, options.threads);
    result.patterns = mine_seasonal(result.gamma, result.min_sup, options);
    return result;
}

std::vector<SeasonalGradualPattern> mine_seasonal(const TemporalSequenceDatabase& db, double theta,
                                                  const MsgpOptions& options) {
    return mine_seasonal_detailed(db, theta, options).patterns;
}

double seasonal_support(std::span<const GradualItem> items, std::span<const PeriodLabel> season,
                        const GammaDatabase& gamma, std::size_t num_cycles) {
    if (items.empty()) throw std::invalid_argument("seasonal support needs at least one item");
    if (season.empty()) throw std::invalid_argument("seasonal support needs a non-empty season");
    if (num_cycles == 0) throw std::invalid_argument("number of cycles must be positive");
    const Itemset x = season_items(season);

    std::size_t weakest = SIZE_MAX;
    for (const auto& item : items) {
        const GammaEntry& e = gamma.entry(item);
        std::size_t count = 0;
        for (const auto& run : e.runs) {
            Itemset t;
            for (const auto& l : run.labels) t.push_back(l.index);
            if (is_subset(x, normalize(t))) ++count;
        }
        weakest = std::min(weakest, count);
    }
    return static_cast<double>(weakest) / static_cast<double>(num_cycles);
}

CountReport count_report(std::span<const SeasonalGradualPattern> patterns) {
    std::set<std::vector<GradualItem>> item_sets;
    std::set<std::pair<std::vector<GradualItem>, std::vector<PeriodLabel>>> pairs;
    for (const auto& g : patterns) {
        item_sets.insert(g.items);
        pairs.emplace(g.items, g.season);
    }
    return {item_sets.size(), pairs.size()};
}

}  // namespace sgp
