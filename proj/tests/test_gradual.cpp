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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "sgp/gradual.hpp"
#include "support.hpp"

namespace sgp {
namespace {

using testing::purchases_db;

const std::vector<std::string> kStrictRows{
    "a^+ : (d1,d2,d3),(d5,d6,d7,d8),(d1,d2,d3,d4),(d7,d8),(d1,d2,d3),(d4,d5,d6,d7)",
    "a^- : (d3,d4,d5),(d8,d1),(d4,d5,d6,d7),(d8,d1),(d3,d4),(d7,d8)",
    "f^+ : (d1,d2),(d5,d6),(d8,d1,d2,d3),(d6,d7,d8,d1),(d3,d4),(d7,d8)",
    "f^- : (d2,d3,d4,d5),(d6,d7,d8),(d3,d4,d5,d6),(d1,d2,d3),(d4,d5,d6,d7)",
    "pi^+ : (d1,d2,d3),(d5,d6,d7),(d1,d2,d3),(d7,d8),(d1,d2,d3),(d5,d6,d7)",
    "pi^- : (d3,d4),(d8,d1),(d4,d5),(d6,d7),(d8,d1),(d3,d4,d5),(d7,d8)",
    "pv^+ : (d1,d2,d3),(d5,d6),(d7,d8),(d1,d2),(d6,d7),(d8,d1),(d3,d4,d5),(d7,d8)",
    "pv^- : (d3,d4,d5),(d6,d7),(d8,d1),(d2,d3,d4,d5,d6),(d7,d8),(d1,d2,d3),(d5,d6,d7)",
};

std::vector<PeriodLabel> labels(std::initializer_list<std::uint32_t> xs) {
    std::vector<PeriodLabel> out;
    for (auto x : xs) out.push_back(PeriodLabel{x});
    return out;
}

TEST(Varies, StrictAndNonStrict) {
    EXPECT_TRUE(varies(1, 2, Direction::Up));
    EXPECT_FALSE(varies(2, 2, Direction::Up));
    EXPECT_TRUE(varies(2, 2, Direction::Up, true));
    EXPECT_TRUE(varies(2, 1, Direction::Down));
    EXPECT_FALSE(varies(1, 2, Direction::Down, true));
}

TEST(Respects, WholeSequence) {
    const std::vector<double> up{1, 2, 5};
    const std::vector<double> flat{1, 1, 2};
    EXPECT_TRUE(respects(up, Direction::Up));
    EXPECT_FALSE(respects(up, Direction::Down));
    EXPECT_FALSE(respects(flat, Direction::Up));
    EXPECT_TRUE(respects(flat, Direction::Up, true));
}

TEST(ComputeRuns, RisingAgeInPurchases) {
    const auto db = purchases_db();
    const auto runs = compute_runs(db, {0, Direction::Up});
    ASSERT_EQ(runs.size(), 6u);
    EXPECT_EQ(runs[0].start, 0u);
    EXPECT_EQ(runs[0].labels, labels({1, 2, 3}));
    EXPECT_EQ(runs[1].labels, labels({5, 6, 7, 8}));
    EXPECT_EQ(runs[2].start, 8u);
    EXPECT_EQ(runs[5].labels, labels({4, 5, 6, 7}));
}

TEST(ComputeRuns, CrossBoundaryJoinsCycles) {
    const auto db = purchases_db();
    const auto runs = compute_runs(db, {1, Direction::Up});
    ASSERT_EQ(runs.size(), 6u);
    EXPECT_EQ(runs[3].labels, labels({6, 7, 8, 1}));
    EXPECT_EQ(runs[3].start, 13u);
}

TEST(ComputeRuns, PerCycleSplitsAtBoundaries) {
    const auto db = purchases_db();
    RunOptions per_cycle;
    per_cycle.cross_boundary = false;
    const auto runs = compute_runs(db, {1, Direction::Up}, per_cycle);
    std::vector<std::vector<PeriodLabel>> got;
    for (const auto& r : runs) got.push_back(r.labels);
    const std::vector<std::vector<PeriodLabel>> want{labels({1, 2}),       labels({5, 6}), labels({1, 2, 3}),
                                                     labels({6, 7, 8}),    labels({3, 4}), labels({7, 8})};
    EXPECT_EQ(got, want);
}

TEST(ComputeRuns, NonStrictKeepsTies) {
    const TemporalSequenceDatabase db({"v"}, 5, {{1}, {2}, {2}, {1}, {1}});
    RunOptions ns;
    ns.non_strict = true;
    const auto up = compute_runs(db, {0, Direction::Up}, ns);
    ASSERT_EQ(up.size(), 2u);
    EXPECT_EQ(up[0].labels, labels({1, 2, 3}));
    EXPECT_EQ(up[1].labels, labels({4, 5}));
    const auto strict = compute_runs(db, {0, Direction::Up});
    ASSERT_EQ(strict.size(), 1u);
    EXPECT_EQ(strict[0].labels, labels({1, 2}));
    EXPECT_TRUE(compute_runs(TemporalSequenceDatabase({"v"}, 3, {{4}, {4}, {4}}), {0, Direction::Down}).empty());
}

TEST(Run, TransactionLabelsKeepFirstOccurrence) {
    sgp::Run r;
    r.labels = labels({7, 8, 1, 2, 3, 4, 5, 6, 7, 8, 1});
    EXPECT_EQ(r.transaction_labels(), labels({7, 8, 1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(r.length(), 11u);
}

TEST(BuildGamma, StrictRowsOfPurchases) {
    const auto gamma = build_gamma(purchases_db());
    EXPECT_EQ(gamma.entries.size(), 8u);
    EXPECT_EQ(gamma.num_cycles, 3u);
    EXPECT_EQ(testing::split_lines(format_gamma_text(gamma)), kStrictRows);
}

TEST(BuildGamma, AgreesWithPrintedRowsWhereSemanticsCoincide) {
    const auto got = testing::split_lines(format_gamma_text(build_gamma(purchases_db())));
    const auto printed = testing::printed_gamma_rows();
    for (std::size_t k : {0u, 1u, 2u, 6u, 7u}) EXPECT_EQ(got[k], printed[k]);
}

TEST(BuildGamma, NonStrictReproducesPrintedItemRows) {
    RunOptions ns;
    ns.non_strict = true;
    const auto got = testing::split_lines(format_gamma_text(build_gamma(purchases_db(), ns)));
    const auto printed = testing::printed_gamma_rows();
    EXPECT_EQ(got[4], printed[4]);
    EXPECT_EQ(got[5], printed[5]);
}

TEST(BuildGamma, EntriesFollowCanonicalOrder) {
    const auto gamma = build_gamma(purchases_db());
    for (std::size_t k = 0; k < gamma.entries.size(); ++k) {
        EXPECT_EQ(canonical_index(gamma.entries[k].item), k);
        EXPECT_EQ(&gamma.entry(gamma.entries[k].item), &gamma.entries[k]);
    }
}

TEST(BuildGamma, ThreadedMatchesSerial) {
    const auto db = purchases_db();
    EXPECT_EQ(build_gamma(db, {}, nullptr, 4), build_gamma(db));
}

TEST(BuildGamma, WarnsOnRunsLongerThanACycle) {
    std::vector<std::vector<double>> rows;
    for (int t = 0; t < 9; ++t) rows.push_back({static_cast<double>(t)});
    Diagnostics diag;
    const auto gamma = build_gamma(TemporalSequenceDatabase({"v"}, 3, rows), {}, &diag);
    ASSERT_EQ(gamma.entries[0].runs.size(), 1u);
    EXPECT_EQ(gamma.entries[0].runs[0].length(), 9u);
    EXPECT_FALSE(diag.warnings.empty());
}

TEST(BuildGamma, SequencesUseItemNames) {
    const auto seqs = build_gamma(purchases_db()).to_sequences();
    ASSERT_EQ(seqs.size(), 8u);
    EXPECT_EQ(seqs[5].sid, "pi^-");
    EXPECT_EQ(seqs[0].transactions[1], (Transaction{5, 6, 7, 8}));
    EXPECT_EQ(seqs[1].transactions[1], (Transaction{1, 8}));
}

}  // namespace
}  // namespace sgp
