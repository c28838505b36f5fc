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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgp/ingest.hpp"
#include "sgp/msgp.hpp"

namespace sgp {

enum class Algorithm { Msgp, Temporal };

std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view text);

/// One sweep cell. Counts and runtime are empty when the cell failed, in which
/// case `error` holds the message. n_seasonality is only filled for msgp.
struct BenchRecord {
    double theta = 0.0;
    Algorithm algorithm = Algorithm::Msgp;
    std::optional<std::size_t> n_patterns;
    std::optional<std::size_t> n_seasonality;
    std::optional<double> runtime_ms;
    std::string error;

    bool ok() const { return error.empty(); }
    bool operator==(const BenchRecord&) const = default;
};

struct SweepOptions {
    MsgpOptions msgp;
    /// Repetitions per cell; the reported runtime is their median.
    int repetitions = 3;
};

/// Runs every (theta, algorithm) cell sequentially. Thetas must be ascending
/// (std::invalid_argument otherwise); a failing cell is recorded, not thrown.
/// Records come back grouped by algorithm, then by theta.
std::vector<BenchRecord> run_sweep(const TemporalSequenceDatabase& db, std::span<const double> thetas,
                                   std::span<const Algorithm> algorithms, const SweepOptions& options = {});

/// CSV with header `theta,algorithm,n_patterns,n_seasonality,runtime_ms`, rows
/// grouped by algorithm then theta. Failed cells carry NA counts.
void write_plot_data(std::span<const BenchRecord> records, std::ostream& out);
void emit_plot_data(std::span<const BenchRecord> records, const std::filesystem::path& path);

std::vector<BenchRecord> read_plot_data(std::istream& in);

}  // namespace sgp
