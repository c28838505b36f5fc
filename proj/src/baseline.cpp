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

#include "sgp/baseline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace sgp {

namespace {

bool couple_counted(std::size_t t, const TemporalSequenceDatabase& db, const RunOptions& adjacency) {
    return adjacency.cross_boundary || (t + 1) % db.cycle_length() != 0;
}

using Bits = std::vector<std::uint64_t>;

struct Node {
    std::vector<std::size_t> items;  // canonical indices, ascending
    Bits couples;
    std::size_t count = 0;
};

std::size_t popcount(const Bits& bits) {
    std::size_t n = 0;
    for (auto w : bits) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

TemporalGradualPattern to_pattern(const Node& node, std::size_t total) {
    TemporalGradualPattern p;
    for (auto k : node.items) p.items.push_back(item_from_canonical_index(k));
    p.count = node.count;
    p.support = static_cast<double>(node.count) / static_cast<double>(total);
    return p;
}

}  // namespace

std::size_t num_couples(const TemporalSequenceDatabase& db, const RunOptions& adjacency) {
    const std::size_t total = db.timeline_length();
    if (total < 2) return 0;
    return adjacency.cross_boundary ? total - 1 : db.num_cycles() * (db.cycle_length() - 1);
}

std::size_t temporal_count(const TemporalSequenceDatabase& db, std::span<const GradualItem> items,
                           const RunOptions& adjacency) {
    std::size_t count = 0;
    for (std::size_t t = 0; t + 1 < db.timeline_length(); ++t) {
        if (!couple_counted(t, db, adjacency)) continue;
        const bool all = std::all_of(items.begin(), items.end(), [&](const GradualItem& item) {
            const auto s = db.series(item.attribute);
            return varies(s[t], s[t + 1], item.direction, adjacency.non_strict);
        });
        if (all) ++count;
    }
    return count;
}

std::vector<TemporalGradualPattern> mine_temporal(const TemporalSequenceDatabase& db, double theta,
                                                  const RunOptions& adjacency) {
    if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must lie in (0, 1]");
    std::vector<TemporalGradualPattern> out;
    const std::size_t total = num_couples(db, adjacency);
    if (total == 0) return out;
    const auto need = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(theta * static_cast<double>(total) - 1e-9)));

    // Couples are renumbered densely so that excluded cross-cycle couples take no bits.
    const std::size_t words = (total + 63) / 64;
    std::vector<Node> level;
    for (std::size_t k = 0; k < 2 * db.num_attributes(); ++k) {
        const GradualItem item = item_from_canonical_index(k);
        const auto s = db.series(item.attribute);
        Node node{{k}, Bits(words, 0), 0};
        std::size_t c = 0;
        for (std::size_t t = 0; t + 1 < db.timeline_length(); ++t) {
            if (!couple_counted(t, db, adjacency)) continue;
            if (varies(s[t], s[t + 1], item.direction, adjacency.non_strict)) node.couples[c / 64] |= 1ULL << (c % 64);
            ++c;
        }
        node.count = popcount(node.couples);
        if (node.count >= need) level.push_back(std::move(node));
    }

    while (!level.empty()) {
        for (const auto& node : level) out.push_back(to_pattern(node, total));
        std::vector<Node> next;
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto& a = level[i].items;
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                const auto& b = level[j].items;
                if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
                // Both directions of one attribute never hold on the same couple.
                if (a.back() / 2 == b.back() / 2) continue;

                std::vector<std::size_t> candidate = a;
                candidate.push_back(b.back());
                bool frequent = true;
                for (std::size_t skip = 0; skip + 2 < candidate.size() && frequent; ++skip) {
                    subset.clear();
                    for (std::size_t k = 0; k < candidate.size(); ++k) {
                        if (k != skip) subset.push_back(candidate[k]);
                    }
                    frequent = std::ranges::binary_search(level, subset, {}, &Node::items);
                }
                if (!frequent) continue;

                Node node{std::move(candidate), Bits(words), 0};
                for (std::size_t w = 0; w < words; ++w) node.couples[w] = level[i].couples[w] & level[j].couples[w];
                node.count = popcount(node.couples);
                if (node.count >= need) next.push_back(std::move(node));
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace sgp
