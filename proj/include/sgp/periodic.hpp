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

// Periodic frequent pattern mining over a database of transaction sequences.
//
// Items are plain unsigned integers; their natural order is the canonical order
// used for prefix joins and for output. Itemsets and transactions are sorted,
// duplicate-free vectors.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sgp {

using Item = std::uint32_t;
using Itemset = std::vector<Item>;
using Transaction = std::vector<Item>;

struct TransactionSequence {
    std::string sid;
    std::vector<Transaction> transactions;

    bool operator==(const TransactionSequence&) const = default;
};

using SequenceDatabase = std::vector<TransactionSequence>;

/// Sorts and deduplicates in place; returns the argument for chaining.
Itemset& normalize(Itemset& items);

/// True iff sorted `sub` is contained in sorted `super`.
bool is_subset(std::span<const Item> sub, std::span<const Item> super);

/// Number of transactions of `s` containing every item of `x`.
/// Throws std::invalid_argument when `x` is empty.
std::size_t support_in_sequence(std::span<const Item> x, const TransactionSequence& s);

/// Gaps between consecutive occurrences of `x` in `s`, with virtual occurrences
/// at position 0 and at |s| (positions are 1-based). Always occurrences + 1 long.
std::vector<std::size_t> periods(std::span<const Item> x, const TransactionSequence& s);

std::size_t max_periodicity(std::span<const Item> x, const TransactionSequence& s);

/// Population standard deviation.
double stddev_periods(std::span<const std::size_t> periods);
double stddev_periods(std::span<const Item> x, const TransactionSequence& s);

/// Fraction of sequences in which `x` occurs in at least min_sup transactions.
double ratio_modified(std::span<const Item> x, const SequenceDatabase& db, std::size_t min_sup);

struct ClassicThresholds {
    std::size_t min_sup = 1;
    std::size_t max_pr = 0;
    double max_std = 0.0;
};

/// Fraction of sequences where support >= min_sup, maxPr <= max_pr and
/// stanDev <= max_std all hold. An empty database gives 0.
double ratio_classic(std::span<const Item> x, const SequenceDatabase& db, const ClassicThresholds& t);

struct PeriodicPattern {
    Itemset itemset;
    std::vector<std::size_t> cover;     // sequence indices, ascending
    std::vector<std::size_t> supports;  // aligned with cover
    double ratio = 0.0;

    bool operator==(const PeriodicPattern&) const = default;
};

struct MinerOptions {
    std::size_t min_sup = 1;
    double min_ra = 0.0;
    /// Worker threads for candidate evaluation. 1 runs everything on the caller.
    unsigned threads = 1;
};

/// Breadth-first levelwise search for every itemset X with
/// ratio_modified(X, db, min_sup) >= min_ra.
///
/// Level 1 is built with one scan of the database. Level k+1 candidates join
/// two level-k patterns sharing a (k-1)-prefix, are pruned unless every k-subset
/// is frequent, and are evaluated by intersecting tid lists per sequence.
/// Output is ordered by itemset size, then lexicographically. Requires
/// min_sup >= 1 and 0 < min_ra <= 1 (std::invalid_argument otherwise).
std::vector<PeriodicPattern> mine(const SequenceDatabase& db, const MinerOptions& options);

/// True iff `labels` (values in 1..cycle_length) form one interval modulo the
/// cycle, e.g. {7,8,1} for cycle_length 8. The full cycle counts as contiguous.
bool is_cyclically_contiguous(std::span<const Item> labels, std::size_t cycle_length);

}  // namespace sgp
