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

#include "sgp/periodic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

namespace sgp {

Itemset& normalize(Itemset& items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

bool is_subset(std::span<const Item> sub, std::span<const Item> super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::size_t support_in_sequence(std::span<const Item> x, const TransactionSequence& s) {
    if (x.empty()) throw std::invalid_argument("support of the empty itemset is undefined");
    return static_cast<std::size_t>(std::count_if(s.transactions.begin(), s.transactions.end(),
                                                  [&](const Transaction& t) { return is_subset(x, t); }));
}

std::vector<std::size_t> periods(std::span<const Item> x, const TransactionSequence& s) {
    std::vector<std::size_t> out;
    std::size_t previous = 0;
    for (std::size_t j = 0; j < s.transactions.size(); ++j) {
        if (is_subset(x, s.transactions[j])) {
            out.push_back(j + 1 - previous);
            previous = j + 1;
        }
    }
    out.push_back(s.transactions.size() - previous);
    return out;
}

std::size_t max_periodicity(std::span<const Item> x, const TransactionSequence& s) {
    const auto p = periods(x, s);
    return *std::max_element(p.begin(), p.end());
}

double stddev_periods(std::span<const std::size_t> p) {
    if (p.empty()) return 0.0;
    double mean = 0.0;
    for (auto v : p) mean += static_cast<double>(v);
    mean /= static_cast<double>(p.size());
    double acc = 0.0;
    for (auto v : p) acc += (static_cast<double>(v) - mean) * (static_cast<double>(v) - mean);
    return std::sqrt(acc / static_cast<double>(p.size()));
}

double stddev_periods(std::span<const Item> x, const TransactionSequence& s) {
    const auto p = periods(x, s);
    return stddev_periods(p);
}

double ratio_modified(std::span<const Item> x, const SequenceDatabase& db, std::size_t min_sup) {
    if (db.empty()) return 0.0;
    const auto n = std::count_if(db.begin(), db.end(),
                                 [&](const TransactionSequence& s) { return support_in_sequence(x, s) >= min_sup; });
    return static_cast<double>(n) / static_cast<double>(db.size());
}

double ratio_classic(std::span<const Item> x, const SequenceDatabase& db, const ClassicThresholds& t) {
    if (db.empty()) return 0.0;
    const auto n = std::count_if(db.begin(), db.end(), [&](const TransactionSequence& s) {
        const auto p = periods(x, s);
        const std::size_t support = p.size() - 1;
        return support >= t.min_sup && *std::max_element(p.begin(), p.end()) <= t.max_pr &&
               stddev_periods(p) <= t.max_std;
    });
    return static_cast<double>(n) / static_cast<double>(db.size());
}

bool is_cyclically_contiguous(std::span<const Item> labels, std::size_t cycle_length) {
    if (labels.empty() || cycle_length == 0) return false;
    std::vector<bool> present(cycle_length + 1, false);
    for (Item l : labels) {
        if (l < 1 || l > cycle_length) return false;
        present[l] = true;
    }
    std::size_t starts = 0;
    for (std::size_t l = 1; l <= cycle_length; ++l) {
        const std::size_t prev = l == 1 ? cycle_length : l - 1;
        if (present[l] && !present[prev]) ++starts;
    }
    // No start at all means every label is present.
    return starts <= 1;
}

// ---------------------------------------------------------------------------
// Levelwise miner

namespace {

// Occurrences of one itemset as per-sequence transaction bitsets, restricted to
// the sequences where the itemset still meets min_sup. Sequence s owns
// words_of[s] consecutive words starting at the entry's offset.
struct TidList {
    struct Entry {
        std::size_t sequence;
        std::size_t support;
        std::size_t offset;
    };
    std::vector<Entry> entries;  // ascending by sequence
    std::vector<std::uint64_t> words;
};

struct Node {
    Itemset itemset;
    TidList tids;
};

// Intersects two tid lists, keeping only sequences that still reach min_sup.
// Returns nullopt as soon as fewer than `need` sequences can survive.
std::optional<TidList> join_tids(const TidList& a, const TidList& b, std::size_t min_sup, std::size_t need,
                                 const std::vector<std::size_t>& words_of) {
    TidList out;
    out.entries.reserve(std::min(a.entries.size(), b.entries.size()));
    out.words.reserve(std::min(a.words.size(), b.words.size()));
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.entries.size() && j < b.entries.size()) {
        const std::size_t remaining = std::min(a.entries.size() - i, b.entries.size() - j);
        if (out.entries.size() + remaining < need) return std::nullopt;
        const auto& ea = a.entries[i];
        const auto& eb = b.entries[j];
        if (ea.sequence < eb.sequence) {
            ++i;
        } else if (eb.sequence < ea.sequence) {
            ++j;
        } else {
            const std::size_t offset = out.words.size();
            std::size_t support = 0;
            for (std::size_t w = 0; w < words_of[ea.sequence]; ++w) {
                const std::uint64_t x = a.words[ea.offset + w] & b.words[eb.offset + w];
                support += static_cast<std::size_t>(std::popcount(x));
                out.words.push_back(x);
            }
            if (support >= min_sup) {
                out.entries.push_back({ea.sequence, support, offset});
            } else {
                out.words.resize(offset);
            }
            ++i;
            ++j;
        }
    }
    if (out.entries.size() < need) return std::nullopt;
    return out;
}

bool all_subsets_frequent(const Itemset& candidate, const std::vector<Node>& level, Itemset& subset) {
    // The two generating subsets (dropping either of the last two items) are known frequent.
    for (std::size_t skip = 0; skip + 2 < candidate.size(); ++skip) {
        subset.clear();
        for (std::size_t k = 0; k < candidate.size(); ++k) {
            if (k != skip) subset.push_back(candidate[k]);
        }
        if (!std::ranges::binary_search(level, subset, {}, &Node::itemset)) return false;
    }
    return true;
}

bool same_prefix(const Itemset& a, const Itemset& b) {
    return std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1);
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
}

PeriodicPattern to_pattern(const Node& node, std::size_t num_sequences) {
    PeriodicPattern p;
    p.itemset = node.itemset;
    p.cover.reserve(node.tids.entries.size());
    p.supports.reserve(node.tids.entries.size());
    for (const auto& e : node.tids.entries) {
        p.cover.push_back(e.sequence);
        p.supports.push_back(e.support);
    }
    p.ratio = static_cast<double>(node.tids.entries.size()) / static_cast<double>(num_sequences);
    return p;
}

}  // namespace

std::vector<PeriodicPattern> mine(const SequenceDatabase& db, const MinerOptions& options) {
    if (options.min_sup < 1) throw std::invalid_argument("min_sup must be at least 1");
    if (!(options.min_ra > 0.0 && options.min_ra <= 1.0)) throw std::invalid_argument("min_ra must lie in (0, 1]");
    std::vector<PeriodicPattern> out;
    if (db.empty()) return out;

    const std::size_t num_sequences = db.size();
    // Smallest sequence count whose ratio reaches min_ra.
    const auto need = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(options.min_ra * static_cast<double>(num_sequences) - 1e-9)));

    std::vector<std::size_t> words_of(num_sequences);
    for (std::size_t s = 0; s < num_sequences; ++s) words_of[s] = (db[s].transactions.size() + 63) / 64;

    // Level 1: one scan builds every item's tid list.
    std::map<Item, TidList> singles;
    for (std::size_t s = 0; s < db.size(); ++s) {
        const auto& transactions = db[s].transactions;
        for (std::size_t j = 0; j < transactions.size(); ++j) {
            for (Item item : transactions[j]) {
                auto& tids = singles[item];
                if (tids.entries.empty() || tids.entries.back().sequence != s) {
                    tids.entries.push_back({s, 0, tids.words.size()});
                    tids.words.resize(tids.words.size() + words_of[s], 0);
                }
                auto& entry = tids.entries.back();
                std::uint64_t& word = tids.words[entry.offset + j / 64];
                const std::uint64_t bit = 1ULL << (j % 64);
                // Transactions are sets, but tolerate duplicates from hand-built input.
                if (!(word & bit)) {
                    word |= bit;
                    ++entry.support;
                }
            }
        }
    }
    std::vector<Node> level;
    for (auto& [item, tids] : singles) {
        TidList kept;
        for (const auto& e : tids.entries) {
            if (e.support < options.min_sup) continue;
            kept.entries.push_back({e.sequence, e.support, kept.words.size()});
            kept.words.insert(kept.words.end(), tids.words.begin() + static_cast<std::ptrdiff_t>(e.offset),
                              tids.words.begin() + static_cast<std::ptrdiff_t>(e.offset + words_of[e.sequence]));
        }
        if (kept.entries.size() >= need) level.push_back({{item}, std::move(kept)});
    }

    while (!level.empty()) {
        for (const auto& node : level) out.push_back(to_pattern(node, num_sequences));
        if (level.size() < 2) break;

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size() && same_prefix(level[i].itemset, level[j].itemset); ++j) {
                pairs.emplace_back(i, j);
            }
        }

        std::vector<std::optional<Node>> results(pairs.size());
        parallel_for(pairs.size(), options.threads, [&](std::size_t k) {
            const auto& a = level[pairs[k].first];
            const auto& b = level[pairs[k].second];
            Itemset candidate;
            candidate.reserve(a.itemset.size() + 1);
            candidate = a.itemset;
            candidate.push_back(b.itemset.back());
            thread_local Itemset subset;
            if (!all_subsets_frequent(candidate, level, subset)) return;
            auto tids = join_tids(a.tids, b.tids, options.min_sup, need, words_of);
            if (tids) results[k] = Node{std::move(candidate), std::move(*tids)};
        });

        std::vector<Node> next;
        for (auto& r : results) {
            if (r) next.push_back(std::move(*r));
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace sgp
