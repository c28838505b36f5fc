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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgp/types.hpp"

namespace sgp {

/// m cycles of cycle_length observations over n numeric attributes.
///
/// Observations are addressed either by (cycle, period) or by their position on
/// the concatenated timeline t = cycle * cycle_length + period, with period
/// 0-based. Values are stored per attribute along the timeline. The object is
/// immutable once constructed.
class TemporalSequenceDatabase {
public:
    /// `rows` holds one vector of n values per observation, in timeline order.
    /// Throws DataError if the shape is inconsistent or a value is not finite.
    TemporalSequenceDatabase(std::vector<std::string> attributes, std::size_t cycle_length,
                             const std::vector<std::vector<double>>& rows);

    const std::vector<std::string>& attributes() const { return attributes_; }
    std::size_t num_attributes() const { return attributes_.size(); }
    std::size_t num_cycles() const { return num_cycles_; }
    std::size_t cycle_length() const { return cycle_length_; }
    std::size_t timeline_length() const { return num_cycles_ * cycle_length_; }

    /// The attribute's values along the whole timeline.
    std::span<const double> series(std::size_t attribute) const { return series_.at(attribute); }

    double value(std::size_t cycle, std::size_t period, std::size_t attribute) const {
        return series_.at(attribute).at(cycle * cycle_length_ + period);
    }

    PeriodLabel label_at(std::size_t t) const {
        return PeriodLabel{static_cast<std::uint32_t>(t % cycle_length_ + 1)};
    }

    std::vector<double> observation(std::size_t t) const;

    /// Optional source names of the periods (label-column mode), indexed by period.
    const std::vector<std::string>& period_names() const { return period_names_; }
    void set_period_names(std::vector<std::string> names);

    std::size_t attribute_index(std::string_view name) const;

    bool operator==(const TemporalSequenceDatabase&) const = default;

private:
    std::vector<std::string> attributes_;
    std::size_t cycle_length_ = 0;
    std::size_t num_cycles_ = 0;
    std::vector<std::vector<double>> series_;
    std::vector<std::string> period_names_;
};

struct IngestConfig {
    /// Fixed cycle length. Exactly one of cycle_length / label_column must be set.
    std::optional<std::size_t> cycle_length;
    /// Column whose values name the period (e.g. day of week).
    std::optional<std::string> label_column;
    /// Numeric attribute columns. Empty means every column except the label column.
    std::vector<std::string> attributes;
    /// Drop rows with missing or non-numeric values. When false such rows are an error.
    bool drop_missing = true;
};

TemporalSequenceDatabase load_csv(const std::filesystem::path& path, const IngestConfig& config,
                                  Diagnostics* diagnostics = nullptr);

TemporalSequenceDatabase parse_csv(std::istream& in, const IngestConfig& config,
                                   Diagnostics* diagnostics = nullptr);

/// Writes `cycle,period,<attributes...>` rows with round-trip exact values.
void write_csv(const TemporalSequenceDatabase& db, std::ostream& out);

/// Writes the CSV to `csv_path` and a sidecar `{m, l, n, attributes}` next to it
/// (same stem, `.json` extension).
void save_database(const TemporalSequenceDatabase& db, const std::filesystem::path& csv_path);

/// Reloads a database written by save_database, using the sidecar for its shape.
TemporalSequenceDatabase load_saved_database(const std::filesystem::path& csv_path);

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// A co-variation planted into synthetic data: the listed attributes move in the
/// given directions over periods [window_start, window_end] of a cycle, jointly,
/// with the given probability per cycle.
struct PlantedPattern {
    std::vector<GradualItem> items;
    std::uint32_t window_start = 1;
    std::uint32_t window_end = 2;
    double probability = 1.0;
};

struct SyntheticSpec {
    std::size_t num_cycles = 0;
    std::size_t cycle_length = 0;
    std::size_t num_attributes = 0;
    std::vector<PlantedPattern> plants;
};

/// Seeded random-walk generator.
///
/// Every attribute starts at 100 and each step moves by a magnitude drawn
/// uniformly from [0.1, 1.0) in a direction chosen by a fair coin, so adjacent
/// values never tie. For each cycle and plant one Bernoulli(probability) draw
/// decides whether the plant fires; when it does, every planted attribute steps
/// in its planted direction on each step inside the window, and in the opposite
/// direction on the step entering the window's first period and on the step
/// leaving its last period (when those positions exist). The planted run is
/// therefore exactly the window. Attributes are named x1..xn.
TemporalSequenceDatabase generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

/// Number of cycles in which every item of `plant` strictly follows its direction
/// across the whole window. Direct scan, used to record realized plant fractions.
std::size_t count_plant_occurrences(const TemporalSequenceDatabase& db, const PlantedPattern& plant);

}  // namespace sgp
