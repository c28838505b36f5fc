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

// Shared fixtures and brute-force oracles for the test suites.
//
// The oracles deliberately share no code with the library beyond its data
// types: they enumerate windows, subsets and direction assignments directly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgp/baseline.hpp"
#include "sgp/gradual.hpp"
#include "sgp/ingest.hpp"
#include "sgp/msgp.hpp"
#include "sgp/periodic.hpp"

namespace sgp::testing {

// ---------------------------------------------------------------------------
// Fixtures

/// The 3-cycle, 8-period customer purchases database (a, f, pi, pv).
inline TemporalSequenceDatabase purchases_db() {
    const std::vector<double> a{22, 24, 28, 20, 18, 35, 38, 44, 32, 34, 36, 40, 25, 23, 20, 41,
                                28, 33, 38, 35, 38, 44, 52, 41};
    const std::vector<double> f{8.72,  22.76, 19.22, 17.20, 8.72,   27.36, 16.05, 15.17,
                                16.05, 19.77, 30.53, 16.13, 14.23,  12.805, 13.11, 14.05,
                                77.45, 15.10, 11.85, 16.97, 8.96,   8.71,  7.78,  57.58};
    const std::vector<double> pi{2, 3, 4, 1, 1, 3, 4, 4, 3, 4, 5, 5, 2, 2, 1, 4, 3, 4, 6, 5, 4, 5, 6, 4};
    const std::vector<double> pv{18.12,   141.46, 179.12, 72.20,  28.62,  175.26, 65.95, 75.16,
                                 35.95,   161.42, 159.06, 114.13, 50.13,  32.70,  54.36, 46.45,
                                 1376.45, 43.09,  29.75,  62.15,  118.86, 88.90,  17.28, 187.57};
    std::vector<std::vector<double>> rows;
    for (std::size_t t = 0; t < a.size(); ++t) rows.push_back({a[t], f[t], pi[t], pv[t]});
    return TemporalSequenceDatabase({"a", "f", "pi", "pv"}, 8, rows);
}

/// The transformed database as printed for the purchases data, one string per
/// row in the order a^+, a^-, f^+, f^-, pi^+, pi^-, pv^+, pv^-.
inline std::vector<std::string> printed_gamma_rows() {
    return {
        "a^+ : (d1,d2,d3),(d5,d6,d7,d8),(d1,d2,d3,d4),(d7,d8),(d1,d2,d3),(d4,d5,d6,d7)",
        "a^- : (d3,d4,d5),(d8,d1),(d4,d5,d6,d7),(d8,d1),(d3,d4),(d7,d8)",
        "f^+ : (d1,d2),(d5,d6),(d8,d1,d2,d3),(d6,d7,d8,d1),(d3,d4),(d7,d8)",
        "f^- : (d2,d3,d4,d5),(d6,d7,d8),(d3,d4),(d5,d6),(d1,d2,d3),(d4,d5,d6,d7)",
        "pi^+ : (d1,d2,d3),(d4,d5,d6,d7,d8),(d1,d2,d3,d4),(d5,d6),(d7,d8),(d1,d2,d3),(d5,d6,d7)",
        "pi^- : (d3,d4,d5),(d7,d8,d1),(d3,d4,d5,d6,d7),(d8,d1),(d3,d4,d5),(d7,d8)",
        "pv^+ : (d1,d2,d3),(d5,d6),(d7,d8),(d1,d2),(d6,d7),(d8,d1),(d3,d4,d5),(d7,d8)",
        "pv^- : (d3,d4,d5),(d6,d7),(d8,d1),(d2,d3,d4,d5,d6),(d7,d8),(d1,d2,d3),(d5,d6,d7)",
    };
}

/// The eight-transaction example sequence over items i1..i5.
inline TransactionSequence example_sequence() {
    return {"s1", {{1, 2, 3}, {2, 4}, {1, 2, 5}, {3}, {1, 2, 4, 5}, {1, 3}, {2, 3}, {2, 5}}};
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string line;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(line);
            line.clear();
        } else {
            line.push_back(c);
        }
    }
    if (!line.empty()) out.push_back(line);
    return out;
}

// ---------------------------------------------------------------------------
// Random instances

inline TemporalSequenceDatabase random_db(std::mt19937_64& rng, std::size_t m, std::size_t l, std::size_t n,
                                          int value_range = 4) {
    std::uniform_int_distribution<int> value(0, value_range);
    std::vector<std::vector<double>> rows(m * l, std::vector<double>(n));
    for (auto& row : rows) {
        for (auto& v : row) v = value(rng);
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) names.push_back("v" + std::to_string(a));
    return TemporalSequenceDatabase(names, l, rows);
}

inline SequenceDatabase random_sequences(std::mt19937_64& rng, std::size_t max_labels, std::size_t max_sequences,
                                         std::size_t max_transactions) {
    std::uniform_int_distribution<std::size_t> labels_d(1, max_labels);
    std::uniform_int_distribution<std::size_t> seq_d(1, max_sequences);
    const std::size_t labels = labels_d(rng);
    const std::size_t sequences = seq_d(rng);
    std::uniform_int_distribution<std::size_t> tx_d(0, max_transactions);
    std::uniform_int_distribution<Item> item_d(1, static_cast<Item>(labels));
    std::uniform_int_distribution<std::size_t> width_d(1, std::min<std::size_t>(labels, 5));
    SequenceDatabase db;
    for (std::size_t s = 0; s < sequences; ++s) {
        TransactionSequence seq;
        seq.sid = "s" + std::to_string(s);
        const std::size_t count = tx_d(rng);
        for (std::size_t j = 0; j < count; ++j) {
            Transaction t;
            const std::size_t width = width_d(rng);
            for (std::size_t k = 0; k < width; ++k) t.push_back(item_d(rng));
            seq.transactions.push_back(std::move(normalize(t)));
        }
        db.push_back(std::move(seq));
    }
    return db;
}

// ---------------------------------------------------------------------------
// Oracles

struct WindowRun {
    std::size_t start;
    std::size_t length;
    auto operator<=>(const WindowRun&) const = default;
};

/// Every contiguous window of length >= 2 that respects the direction on each
/// adjacent pair and cannot be extended on either side within its segment.
inline std::vector<WindowRun> oracle_runs(const std::vector<double>& values, std::size_t cycle_length,
                                          Direction direction, bool cross_boundary) {
    auto ok = [&](std::size_t t) {
        return direction == Direction::Up ? values[t + 1] > values[t] : values[t + 1] < values[t];
    };
    const std::size_t total = values.size();
    const std::size_t segment = cross_boundary ? total : cycle_length;
    std::vector<WindowRun> out;
    for (std::size_t begin = 0; begin < total; begin += segment) {
        const std::size_t end = begin + segment;
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = i + 1; j < end; ++j) {
                bool respects_all = true;
                for (std::size_t t = i; t < j; ++t) respects_all = respects_all && ok(t);
                if (!respects_all) continue;
                const bool left_closed = i == begin || !ok(i - 1);
                const bool right_closed = j + 1 == end || !ok(j);
                if (left_closed && right_closed) out.push_back({i, j - i + 1});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::set<Item> universe(const SequenceDatabase& db) {
    std::set<Item> items;
    for (const auto& s : db) {
        for (const auto& t : s.transactions) items.insert(t.begin(), t.end());
    }
    return items;
}

inline std::size_t oracle_support(const std::vector<Item>& x, const TransactionSequence& s) {
    std::size_t n = 0;
    for (const auto& t : s.transactions) {
        bool all = true;
        for (Item i : x) all = all && std::find(t.begin(), t.end(), i) != t.end();
        if (all) ++n;
    }
    return n;
}

/// Enumerates every non-empty subset of the item universe.
inline std::vector<PeriodicPattern> oracle_mine(const SequenceDatabase& db, std::size_t min_sup, double min_ra) {
    const std::set<Item> items_set = universe(db);
    const std::vector<Item> items(items_set.begin(), items_set.end());
    std::vector<PeriodicPattern> out;
    for (std::uint32_t mask = 1; mask < (1u << items.size()); ++mask) {
        PeriodicPattern p;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (mask & (1u << k)) p.itemset.push_back(items[k]);
        }
        for (std::size_t s = 0; s < db.size(); ++s) {
            const std::size_t sup = oracle_support(p.itemset, db[s]);
            if (sup >= min_sup) {
                p.cover.push_back(s);
                p.supports.push_back(sup);
            }
        }
        p.ratio = static_cast<double>(p.cover.size()) / static_cast<double>(db.size());
        if (!p.cover.empty() && p.ratio >= min_ra) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const PeriodicPattern& a, const PeriodicPattern& b) {
        if (a.itemset.size() != b.itemset.size()) return a.itemset.size() < b.itemset.size();
        return a.itemset < b.itemset;
    });
    return out;
}

/// Seasonal patterns by direct enumeration of label subsets, grouped by cover,
/// optionally keeping only seasons maximal for their item set.
inline std::vector<SeasonalGradualPattern> oracle_seasonal(const GammaDatabase& gamma, std::size_t min_sup,
                                                           bool maximal_only) {
    std::vector<SeasonalGradualPattern> all;
    const std::size_t l = gamma.cycle_length;
    for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
        std::vector<Item> x;
        for (std::size_t k = 0; k < l; ++k) {
            if (mask & (1u << k)) x.push_back(static_cast<Item>(k + 1));
        }
        SeasonalGradualPattern g;
        std::size_t weakest = SIZE_MAX;
        for (const auto& e : gamma.entries) {
            std::size_t sup = 0;
            for (const auto& run : e.runs) {
                bool all_in = true;
                for (Item label : x) {
                    all_in = all_in && std::any_of(run.labels.begin(), run.labels.end(),
                                                   [&](const PeriodLabel& pl) { return pl.index == label; });
                }
                if (all_in) ++sup;
            }
            if (sup >= min_sup) {
                g.items.push_back(e.item);
                g.per_item_support.push_back(sup);
                weakest = std::min(weakest, sup);
            }
        }
        if (g.items.empty()) continue;
        for (Item label : x) g.season.push_back(PeriodLabel{label});
        g.support = static_cast<double>(weakest) / static_cast<double>(gamma.num_cycles);
        all.push_back(std::move(g));
    }
    if (!maximal_only) return all;
    std::vector<SeasonalGradualPattern> out;
    for (const auto& g : all) {
        const bool dominated = std::any_of(all.begin(), all.end(), [&](const SeasonalGradualPattern& h) {
            return h.items == g.items && h.season.size() > g.season.size() &&
                   std::includes(h.season.begin(), h.season.end(), g.season.begin(), g.season.end());
        });
        if (!dominated) out.push_back(g);
    }
    return out;
}

using PatternKey = std::pair<std::vector<GradualItem>, std::vector<PeriodLabel>>;

inline std::map<PatternKey, SeasonalGradualPattern> by_key(const std::vector<SeasonalGradualPattern>& patterns) {
    std::map<PatternKey, SeasonalGradualPattern> out;
    for (const auto& p : patterns) out.emplace(PatternKey{p.items, p.season}, p);
    return out;
}

/// Every consistent assignment attribute -> {absent, up, down}, counted couple by couple.
inline std::vector<TemporalGradualPattern> oracle_temporal(const TemporalSequenceDatabase& db, double theta,
                                                           bool cross_boundary) {
    const std::size_t n = db.num_attributes();
    std::size_t assignments = 1;
    for (std::size_t a = 0; a < n; ++a) assignments *= 3;
    std::size_t couples = 0;
    for (std::size_t t = 0; t + 1 < db.timeline_length(); ++t) {
        if (cross_boundary || (t + 1) % db.cycle_length() != 0) ++couples;
    }
    std::vector<TemporalGradualPattern> out;
    for (std::size_t code = 1; code < assignments; ++code) {
        TemporalGradualPattern p;
        std::size_t c = code;
        for (std::size_t a = 0; a < n; ++a, c /= 3) {
            if (c % 3 == 1) p.items.push_back({a, Direction::Up});
            if (c % 3 == 2) p.items.push_back({a, Direction::Down});
        }
        for (std::size_t t = 0; t + 1 < db.timeline_length(); ++t) {
            if (!cross_boundary && (t + 1) % db.cycle_length() == 0) continue;
            bool all = true;
            for (const auto& item : p.items) {
                const double x = db.series(item.attribute)[t];
                const double y = db.series(item.attribute)[t + 1];
                all = all && (item.direction == Direction::Up ? y > x : y < x);
            }
            if (all) ++p.count;
        }
        p.support = couples == 0 ? 0.0 : static_cast<double>(p.count) / static_cast<double>(couples);
        if (p.count > 0 && p.support >= theta) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.items.size() != y.items.size()) return x.items.size() < y.items.size();
        return x.items < y.items;
    });
    return out;
}

}  // namespace sgp::testing
