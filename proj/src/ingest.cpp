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

#include "sgp/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace sgp {

// ---------------------------------------------------------------------------
// TemporalSequenceDatabase

TemporalSequenceDatabase::TemporalSequenceDatabase(std::vector<std::string> attributes, std::size_t cycle_length,
                                                   const std::vector<std::vector<double>>& rows)
    : attributes_(std::move(attributes)), cycle_length_(cycle_length) {
    if (cycle_length_ == 0) throw DataError("cycle length must be positive");
    if (attributes_.empty()) throw DataError("at least one attribute is required");
    if (rows.empty()) throw DataError("zero complete cycles");
    if (rows.size() % cycle_length_ != 0) {
        throw DataError("row count " + std::to_string(rows.size()) + " is not a multiple of the cycle length " +
                        std::to_string(cycle_length_));
    }
    num_cycles_ = rows.size() / cycle_length_;
    series_.assign(attributes_.size(), std::vector<double>(rows.size()));
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (rows[t].size() != attributes_.size()) {
            throw DataError("observation " + std::to_string(t) + " has " + std::to_string(rows[t].size()) +
                            " values, expected " + std::to_string(attributes_.size()));
        }
        for (std::size_t a = 0; a < attributes_.size(); ++a) {
            if (!std::isfinite(rows[t][a])) throw DataError("non-finite value at observation " + std::to_string(t));
            series_[a][t] = rows[t][a];
        }
    }
}

std::vector<double> TemporalSequenceDatabase::observation(std::size_t t) const {
    std::vector<double> out;
    out.reserve(series_.size());
    for (const auto& s : series_) out.push_back(s.at(t));
    return out;
}

void TemporalSequenceDatabase::set_period_names(std::vector<std::string> names) {
    if (!names.empty() && names.size() != cycle_length_) {
        throw DataError("period name count does not match the cycle length");
    }
    period_names_ = std::move(names);
}

std::size_t TemporalSequenceDatabase::attribute_index(std::string_view name) const {
    auto it = std::find(attributes_.begin(), attributes_.end(), name);
    if (it == attributes_.end()) throw DataError("unknown attribute '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - attributes_.begin());
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// RFC 4180-ish: quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back(trim(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.emplace_back(trim(field));
    return fields;
}

std::optional<double> parse_number(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::string quote_csv(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

TemporalSequenceDatabase parse_csv(std::istream& in, const IngestConfig& config, Diagnostics* diagnostics) {
    if (config.cycle_length.has_value() == config.label_column.has_value()) {
        throw std::invalid_argument("set exactly one of cycle length or label column");
    }
    if (config.cycle_length && *config.cycle_length == 0) {
        throw std::invalid_argument("cycle length must be positive");
    }

    std::string line;
    while (std::getline(in, line) && is_blank(line)) {
    }
    if (!in && line.empty()) throw DataError("zero complete cycles");
    const std::vector<std::string> header = split_csv_line(line);

    auto column_of = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw DataError("column '" + name + "' not found in header");
        return static_cast<std::size_t>(it - header.begin());
    };

    std::optional<std::size_t> label_col;
    if (config.label_column) label_col = column_of(*config.label_column);

    std::vector<std::string> attributes = config.attributes;
    if (attributes.empty()) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (!label_col || c != *label_col) attributes.push_back(header[c]);
        }
    }
    std::vector<std::size_t> attr_cols;
    for (const auto& a : attributes) attr_cols.push_back(column_of(a));

    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_labels;
    std::size_t dropped = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        std::vector<double> values;
        values.reserve(attr_cols.size());
        bool ok = fields.size() == header.size();
        for (std::size_t c : attr_cols) {
            if (!ok) break;
            auto v = parse_number(fields[c]);
            if (!v) ok = false;
            else values.push_back(*v);
        }
        if (ok && label_col && fields[*label_col].empty()) ok = false;
        if (!ok) {
            if (!config.drop_missing) {
                throw DataError("line " + std::to_string(line_no) + " has a missing or non-numeric value");
            }
            ++dropped;
            continue;
        }
        rows.push_back(std::move(values));
        if (label_col) row_labels.push_back(fields[*label_col]);
    }
    if (dropped > 0 && diagnostics) {
        diagnostics->warn("dropped " + std::to_string(dropped) + " rows with missing or non-numeric values");
    }

    std::size_t cycle_length = 0;
    std::vector<std::string> period_names;
    if (config.cycle_length) {
        cycle_length = *config.cycle_length;
    } else {
        // Label order is the order of first appearance; each cycle must list every
        // label exactly once in that order.
        std::map<std::string, std::size_t> index_of;
        for (const auto& l : row_labels) {
            if (index_of.emplace(l, period_names.size()).second) period_names.push_back(l);
        }
        cycle_length = period_names.size();
        for (std::size_t r = 0; r < row_labels.size(); ++r) {
            // A trailing partial cycle passes this check and is truncated below.
            if (index_of.at(row_labels[r]) != r % cycle_length) {
                throw DataError("non-constant row count per declared period label (row " + std::to_string(r + 1) +
                                " has label '" + row_labels[r] + "')");
            }
        }
    }

    const std::size_t complete_cycles = cycle_length == 0 ? 0 : rows.size() / cycle_length;
    if (complete_cycles == 0) throw DataError("zero complete cycles");
    const std::size_t keep = complete_cycles * cycle_length;
    if (keep < rows.size()) {
        if (diagnostics) {
            diagnostics->warn("dropped trailing partial cycle of " + std::to_string(rows.size() - keep) + " rows");
        }
        rows.resize(keep);
    }

    TemporalSequenceDatabase db(std::move(attributes), cycle_length, rows);
    if (!period_names.empty()) db.set_period_names(std::move(period_names));
    return db;
}

TemporalSequenceDatabase load_csv(const std::filesystem::path& path, const IngestConfig& config,
                                  Diagnostics* diagnostics) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read '" + path.string() + "'");
    return parse_csv(in, config, diagnostics);
}

void write_csv(const TemporalSequenceDatabase& db, std::ostream& out) {
    out << "cycle,period";
    for (const auto& a : db.attributes()) out << ',' << quote_csv(a);
    out << '\n';
    for (std::size_t t = 0; t < db.timeline_length(); ++t) {
        out << (t / db.cycle_length() + 1) << ',' << db.label_at(t).display();
        for (std::size_t a = 0; a < db.num_attributes(); ++a) out << ',' << format_double(db.series(a)[t]);
        out << '\n';
    }
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
    auto p = csv_path;
    p.replace_extension(".json");
    if (p == csv_path) p += ".json";
    return p;
}

void save_database(const TemporalSequenceDatabase& db, const std::filesystem::path& csv_path) {
    std::ofstream out(csv_path);
    if (!out) throw DataError("cannot write '" + csv_path.string() + "'");
    write_csv(db, out);

    nlohmann::json meta{{"m", db.num_cycles()},
                        {"l", db.cycle_length()},
                        {"n", db.num_attributes()},
                        {"attributes", db.attributes()}};
    if (!db.period_names().empty()) meta["period_names"] = db.period_names();
    std::ofstream side(sidecar_path(csv_path));
    if (!side) throw DataError("cannot write '" + sidecar_path(csv_path).string() + "'");
    side << meta.dump(2) << '\n';
}

TemporalSequenceDatabase load_saved_database(const std::filesystem::path& csv_path) {
    std::ifstream side(sidecar_path(csv_path));
    if (!side) throw DataError("missing sidecar '" + sidecar_path(csv_path).string() + "'");
    nlohmann::json meta;
    try {
        side >> meta;
        IngestConfig config;
        config.cycle_length = meta.at("l").get<std::size_t>();
        config.attributes = meta.at("attributes").get<std::vector<std::string>>();
        config.drop_missing = false;
        auto db = load_csv(csv_path, config);
        if (db.num_cycles() != meta.at("m").get<std::size_t>() ||
            db.num_attributes() != meta.at("n").get<std::size_t>()) {
            throw DataError("database shape does not match its sidecar");
        }
        if (meta.contains("period_names")) db.set_period_names(meta["period_names"].get<std::vector<std::string>>());
        return db;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed sidecar: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Synthetic data

namespace {

// Uniform in [0, 1) from the top 53 bits, independent of the standard
// library's distribution implementations.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

TemporalSequenceDatabase generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
    if (spec.num_cycles == 0 || spec.cycle_length == 0 || spec.num_attributes == 0) {
        throw std::invalid_argument("synthetic spec needs m, l and n >= 1");
    }
    for (const auto& p : spec.plants) {
        if (p.probability < 0.0 || p.probability > 1.0 || std::isnan(p.probability)) {
            throw std::invalid_argument("plant probability outside [0,1]");
        }
        if (p.window_start < 1 || p.window_end > spec.cycle_length) {
            throw std::invalid_argument("plant window exceeds the cycle length");
        }
        if (p.window_start >= p.window_end) throw std::invalid_argument("plant window must span at least two periods");
        if (p.items.empty()) throw std::invalid_argument("plant has no items");
        for (const auto& item : p.items) {
            if (item.attribute >= spec.num_attributes) throw std::invalid_argument("plant attribute out of range");
        }
    }

    std::mt19937_64 rng(seed);
    const std::size_t l = spec.cycle_length;
    const std::size_t total = spec.num_cycles * l;

    // forced[a][t]: direction of the step from t-1 to t, if constrained.
    std::vector<std::vector<std::optional<Direction>>> forced(
        spec.num_attributes, std::vector<std::optional<Direction>>(total));
    for (std::size_t c = 0; c < spec.num_cycles; ++c) {
        for (const auto& p : spec.plants) {
            if (!(uniform01(rng) < p.probability)) continue;
            const std::size_t first = c * l + (p.window_start - 1);
            const std::size_t last = c * l + (p.window_end - 1);
            for (const auto& item : p.items) {
                auto& f = forced[item.attribute];
                if (first > 0) f[first] = opposite(item.direction);
                if (last + 1 < total) f[last + 1] = opposite(item.direction);
                for (std::size_t t = first + 1; t <= last; ++t) f[t] = item.direction;
            }
        }
    }

    std::vector<std::string> names;
    for (std::size_t a = 0; a < spec.num_attributes; ++a) names.push_back("x" + std::to_string(a + 1));

    std::vector<std::vector<double>> rows(total, std::vector<double>(spec.num_attributes));
    for (std::size_t a = 0; a < spec.num_attributes; ++a) {
        double v = 100.0;
        rows[0][a] = v;
        for (std::size_t t = 1; t < total; ++t) {
            const double magnitude = 0.1 + 0.9 * uniform01(rng);
            const bool heads = uniform01(rng) < 0.5;
            const Direction d = forced[a][t].value_or(heads ? Direction::Up : Direction::Down);
            v += d == Direction::Up ? magnitude : -magnitude;
            rows[t][a] = v;
        }
    }
    return TemporalSequenceDatabase(std::move(names), l, rows);
}

std::size_t count_plant_occurrences(const TemporalSequenceDatabase& db, const PlantedPattern& plant) {
    std::size_t count = 0;
    for (std::size_t c = 0; c < db.num_cycles(); ++c) {
        bool all = true;
        for (const auto& item : plant.items) {
            for (std::uint32_t k = plant.window_start; k < plant.window_end && all; ++k) {
                const double before = db.value(c, k - 1, item.attribute);
                const double after = db.value(c, k, item.attribute);
                all = item.direction == Direction::Up ? after > before : after < before;
            }
        }
        if (all) ++count;
    }
    return count;
}

}  // namespace sgp
