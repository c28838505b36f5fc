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
#include <span>
#include <string>
#include <vector>

#include "sgp/ingest.hpp"
#include "sgp/periodic.hpp"
#include "sgp/types.hpp"

namespace sgp {

struct RunOptions {
    /// Treat the last observation of a cycle as adjacent to the first of the next.
    bool cross_boundary = true;
    /// Use <= / >= instead of < / >. Exploration only.
    bool non_strict = false;
};

/// True iff going from `from` to `to` is a variation in `direction`.
bool varies(double from, double to, Direction direction, bool non_strict = false);

/// True iff every adjacent pair of `values` moves in `direction`.
/// A single value respects both directions. Requires a non-empty span.
bool respects(std::span<const double> values, Direction direction, bool non_strict = false);

/// One maximal monotone list of consecutive observations.
struct Run {
    std::size_t start = 0;            // timeline position of the first observation
    std::vector<PeriodLabel> labels;  // one label per observation, in order

    std::size_t length() const { return labels.size(); }

    /// Labels as a transaction: repeated labels (runs longer than a cycle) keep
    /// their first occurrence only, in run order.
    std::vector<PeriodLabel> transaction_labels() const;

    bool operator==(const Run&) const = default;
};

/// All maximal runs of length >= 2 of `item` over the timeline, ascending.
std::vector<Run> compute_runs(const TemporalSequenceDatabase& db, const GradualItem& item,
                              const RunOptions& options = {});

struct GammaEntry {
    GradualItem item;
    std::vector<Run> runs;

    bool operator==(const GammaEntry&) const = default;
};

/// The derived sequence database: one run sequence per gradual item, in the
/// order a1^+, a1^-, a2^+, ...
struct GammaDatabase {
    std::vector<std::string> attributes;
    std::size_t cycle_length = 0;
    std::size_t num_cycles = 0;
    std::vector<GammaEntry> entries;

    const GammaEntry& entry(const GradualItem& item) const;

    /// Runs as transactions of label indices, sid = item name ("age^+").
    SequenceDatabase to_sequences() const;

    bool operator==(const GammaDatabase&) const = default;
};

/// Builds one entry per gradual item. Runs longer than one cycle produce a
/// warning in `diagnostics`. `threads` > 1 computes entries concurrently; the
/// entry order is fixed regardless.
GammaDatabase build_gamma(const TemporalSequenceDatabase& db, const RunOptions& options = {},
                          Diagnostics* diagnostics = nullptr, unsigned threads = 1);

/// `a^+ : (d1,d2,d3),(d5,d6,d7,d8)` lines, one per entry.
std::string format_gamma_text(const GammaDatabase& gamma);

}  // namespace sgp
