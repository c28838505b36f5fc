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

#include "sgp/gradual.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace sgp {

bool varies(double from, double to, Direction direction, bool non_strict) {
    if (direction == Direction::Up) return non_strict ? to >= from : to > from;
    return non_strict ? to <= from : to < from;
}

bool respects(std::span<const double> values, Direction direction, bool non_strict) {
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
        if (!varies(values[j], values[j + 1], direction, non_strict)) return false;
    }
    return true;
}

std::vector<PeriodLabel> Run::transaction_labels() const {
    std::vector<PeriodLabel> out;
    for (const auto& l : labels) {
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    return out;
}

std::vector<Run> compute_runs(const TemporalSequenceDatabase& db, const GradualItem& item,
                              const RunOptions& options) {
    if (item.attribute >= db.num_attributes()) throw std::invalid_argument("attribute index out of range");
    const auto values = db.series(item.attribute);
    const std::size_t total = db.timeline_length();
    const std::size_t segment = options.cross_boundary ? total : db.cycle_length();

    std::vector<Run> runs;
    for (std::size_t begin = 0; begin < total; begin += segment) {
        const std::size_t end = begin + segment;
        std::size_t i = begin;
        while (i + 1 < end) {
            std::size_t j = i;
            while (j + 1 < end && varies(values[j], values[j + 1], item.direction, options.non_strict)) ++j;
            if (j == i) {
                ++i;
                continue;
            }
            Run run;
            run.start = i;
            for (std::size_t t = i; t <= j; ++t) run.labels.push_back(db.label_at(t));
            runs.push_back(std::move(run));
            i = j;
        }
    }
    return runs;
}

const GammaEntry& GammaDatabase::entry(const GradualItem& item) const {
    const std::size_t k = canonical_index(item);
    if (k >= entries.size() || entries[k].item != item) {
        throw std::invalid_argument("gradual item has no entry in the transformed database");
    }
    return entries[k];
}

SequenceDatabase GammaDatabase::to_sequences() const {
    SequenceDatabase out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        TransactionSequence s;
        s.sid = item_name(e.item, attributes);
        for (const auto& run : e.runs) {
            Transaction t;
            for (const auto& l : run.labels) t.push_back(l.index);
            s.transactions.push_back(std::move(normalize(t)));
        }
        out.push_back(std::move(s));
    }
    return out;
}

GammaDatabase build_gamma(const TemporalSequenceDatabase& db, const RunOptions& options, Diagnostics* diagnostics,
                          unsigned threads) {
    GammaDatabase gamma;
    gamma.attributes = db.attributes();
    gamma.cycle_length = db.cycle_length();
    gamma.num_cycles = db.num_cycles();
    gamma.entries.resize(2 * db.num_attributes());

    auto fill = [&](std::size_t k) {
        const GradualItem item = item_from_canonical_index(k);
        gamma.entries[k] = GammaEntry{item, compute_runs(db, item, options)};
    };
    if (threads <= 1) {
        for (std::size_t k = 0; k < gamma.entries.size(); ++k) fill(k);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t workers = std::min<std::size_t>(threads, gamma.entries.size());
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < gamma.entries.size(); k += workers) fill(k);
            });
        }
    }

    if (diagnostics) {
        for (const auto& e : gamma.entries) {
            for (const auto& run : e.runs) {
                if (run.length() > db.cycle_length()) {
                    diagnostics->warn("run of " + item_name(e.item, gamma.attributes) + " starting at position " +
                                      std::to_string(run.start) + " spans more than one cycle (" +
                                      std::to_string(run.length()) + " observations); repeated labels are merged");
                }
            }
        }
    }
    return gamma;
}

std::string format_gamma_text(const GammaDatabase& gamma) {
    std::string out;
    for (const auto& e : gamma.entries) {
        out += item_name(e.item, gamma.attributes);
        out += " :";
        for (std::size_t r = 0; r < e.runs.size(); ++r) {
            out += r == 0 ? " (" : ",(";
            for (std::size_t k = 0; k < e.runs[r].labels.size(); ++k) {
                if (k > 0) out += ',';
                out += e.runs[r].labels[k].display();
            }
            out += ')';
        }
        out += '\n';
    }
    return out;
}

}  // namespace sgp
