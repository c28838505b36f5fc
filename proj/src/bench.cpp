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

#include "sgp/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sgp/baseline.hpp"

namespace sgp {

std::string_view algorithm_name(Algorithm a) { return a == Algorithm::Msgp ? "msgp" : "temporal"; }

Algorithm parse_algorithm(std::string_view text) {
    if (text == "msgp") return Algorithm::Msgp;
    if (text == "temporal") return Algorithm::Temporal;
    throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

namespace {

struct CellResult {
    std::size_t n_patterns = 0;
    std::optional<std::size_t> n_seasonality;
};

CellResult run_cell(const TemporalSequenceDatabase& db, double theta, Algorithm algorithm, const SweepOptions& options) {
    if (algorithm == Algorithm::Msgp) {
        const auto patterns = mine_seasonal(db, theta, options.msgp);
        const auto counts = count_report(patterns);
        return {counts.n_patterns, counts.n_seasonality};
    }
    return {mine_temporal(db, theta, options.msgp.runs).size(), std::nullopt};
}

bool record_order(const BenchRecord& a, const BenchRecord& b) {
    if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
    return a.theta < b.theta;
}

}  // namespace

std::vector<BenchRecord> run_sweep(const TemporalSequenceDatabase& db, std::span<const double> thetas,
                                   std::span<const Algorithm> algorithms, const SweepOptions& options) {
    if (!std::is_sorted(thetas.begin(), thetas.end())) throw std::invalid_argument("thetas must be ascending");
    if (options.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");

    std::vector<Algorithm> order(algorithms.begin(), algorithms.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    std::vector<BenchRecord> records;
    for (Algorithm algorithm : order) {
        for (double theta : thetas) {
            BenchRecord record;
            record.theta = theta;
            record.algorithm = algorithm;
            try {
                std::vector<double> times;
                CellResult result;
                for (int r = 0; r < options.repetitions; ++r) {
                    const auto start = std::chrono::steady_clock::now();
                    result = run_cell(db, theta, algorithm, options);
                    const auto stop = std::chrono::steady_clock::now();
                    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
                }
                std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2),
                                 times.end());
                record.n_patterns = result.n_patterns;
                record.n_seasonality = result.n_seasonality;
                record.runtime_ms = times[times.size() / 2];
            } catch (const std::exception& e) {
                record.error = e.what();
                if (record.error.empty()) record.error = "failed";
            }
            records.push_back(std::move(record));
        }
    }
    return records;
}

void write_plot_data(std::span<const BenchRecord> records, std::ostream& out) {
    std::vector<BenchRecord> sorted(records.begin(), records.end());
    std::stable_sort(sorted.begin(), sorted.end(), record_order);
    out << "theta,algorithm,n_patterns,n_seasonality,runtime_ms\n";
    for (const auto& r : sorted) {
        out << format_double(r.theta) << ',' << algorithm_name(r.algorithm) << ',';
        if (!r.ok()) {
            out << "NA," << (r.algorithm == Algorithm::Msgp ? "NA" : "") << ",NA\n";
            continue;
        }
        out << *r.n_patterns << ',';
        if (r.n_seasonality) out << *r.n_seasonality;
        out << ',' << format_double(r.runtime_ms.value_or(0.0)) << '\n';
    }
}

void emit_plot_data(std::span<const BenchRecord> records, const std::filesystem::path& path) {
    if (records.empty()) throw std::invalid_argument("no records to emit");
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    write_plot_data(records, out);
    if (!out) throw DataError("write to '" + path.string() + "' failed");
}

namespace {

template <typename T>
T parse_field(const std::string& field) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw DataError("malformed plot-data field '" + field + "'");
    }
    return value;
}

}  // namespace

std::vector<BenchRecord> read_plot_data(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "theta,algorithm,n_patterns,n_seasonality,runtime_ms") {
        throw DataError("unexpected plot-data header");
    }
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (fields.size() != 5) throw DataError("plot-data row must have 5 fields: '" + line + "'");

        BenchRecord r;
        r.theta = parse_field<double>(fields[0]);
        r.algorithm = parse_algorithm(fields[1]);
        if (fields[2] == "NA") {
            r.error = "failed";
        } else {
            r.n_patterns = parse_field<std::size_t>(fields[2]);
            if (!fields[3].empty()) r.n_seasonality = parse_field<std::size_t>(fields[3]);
            r.runtime_ms = parse_field<double>(fields[4]);
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace sgp
