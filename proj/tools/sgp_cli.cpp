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

// sgp: command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgp/baseline.hpp"
#include "sgp/bench.hpp"
#include "sgp/gradual.hpp"
#include "sgp/ingest.hpp"
#include "sgp/msgp.hpp"
#include "sgp/periodic.hpp"
#include "sgp/report.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct GlobalOptions {
    std::string input;
    std::optional<std::size_t> cycle_length;
    std::optional<std::string> label_column;
    std::vector<std::string> attributes;
    bool drop_missing = true;
    std::string theta = "1";
    std::optional<std::size_t> min_sup_abs;
    std::string cross_boundary = "on";
    bool non_strict = false;
    bool contiguous_only = false;
    bool all_seasons = false;
    std::size_t min_items = 1;
    bool prune_subsumed = false;
    std::string output;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

// Accepts "0.5" as well as "2/3".
double parse_ratio(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v;
        }
        const double num = std::stod(text.substr(0, slash), &used);
        const double den = std::stod(text.substr(slash + 1));
        return num / den;
    } catch (const std::logic_error&) {
        throw std::invalid_argument("invalid number '" + text + "'");
    }
}

sgp::MsgpOptions msgp_options(const GlobalOptions& g) {
    sgp::MsgpOptions o;
    o.runs.cross_boundary = g.cross_boundary == "on";
    o.runs.non_strict = g.non_strict;
    o.min_sup_abs = g.min_sup_abs;
    o.contiguous_only = g.contiguous_only;
    o.all_seasons = g.all_seasons;
    o.min_items = g.min_items;
    o.prune_subsumed = g.prune_subsumed;
    o.threads = g.threads;
    return o;
}

void print_warnings(const sgp::Diagnostics& d) {
    for (const auto& w : d.warnings) std::cerr << "warning: " << w << '\n';
}

sgp::TemporalSequenceDatabase load_input(const GlobalOptions& g) {
    if (g.input.empty()) throw std::invalid_argument("--input is required");
    sgp::Diagnostics diag;
    if (!g.cycle_length && !g.label_column) {
        if (std::filesystem::exists(sgp::sidecar_path(g.input))) return sgp::load_saved_database(g.input);
        throw std::invalid_argument("give --cycle-length or --label-column (or a saved database with its sidecar)");
    }
    sgp::IngestConfig config;
    config.cycle_length = g.cycle_length;
    config.label_column = g.label_column;
    config.attributes = g.attributes;
    config.drop_missing = g.drop_missing;
    auto db = sgp::load_csv(g.input, config, &diag);
    print_warnings(diag);
    return db;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_transform(const GlobalOptions& g) {
    const auto db = load_input(g);
    sgp::Diagnostics diag;
    const auto gamma = sgp::build_gamma(db, msgp_options(g).runs, &diag, g.threads);
    print_warnings(diag);
    if (g.output == "json") {
        std::cout << sgp::gamma_to_json(gamma).dump() << '\n';
    } else {
        std::cout << sgp::format_gamma_text(gamma);
    }
    return 0;
}

int cmd_mine(const GlobalOptions& g) {
    const auto db = load_input(g);
    const double theta = parse_ratio(g.theta);
    const auto start = std::chrono::steady_clock::now();
    const auto result = sgp::mine_seasonal_detailed(db, theta, msgp_options(g));
    const double runtime = elapsed_ms(start);
    print_warnings(result.diagnostics);
    const auto counts = sgp::count_report(result.patterns);

    if (g.output == "table") {
        std::cout << sgp::format_seasonal_table(result.patterns, db.attributes());
        std::cout << "\npatterns: " << counts.n_patterns << "  seasonality: " << counts.n_seasonality
                  << "  min_sup: " << result.min_sup << "  runtime_ms: " << sgp::format_double(runtime) << '\n';
    } else if (g.output == "csv") {
        std::cout << "items,season,support\n";
        for (const auto& p : result.patterns) {
            std::string items;
            for (std::size_t k = 0; k < p.items.size(); ++k) {
                items += (k ? " " : "") + sgp::item_name(p.items[k], db.attributes());
            }
            std::string season;
            for (std::size_t k = 0; k < p.season.size(); ++k) season += (k ? " " : "") + p.season[k].display();
            std::cout << items << ',' << season << ',' << sgp::format_double(p.support) << '\n';
        }
    } else {
        for (const auto& p : result.patterns) {
            std::cout << sgp::seasonal_pattern_to_json(p, db.attributes()).dump() << '\n';
        }
        std::cout << sgp::Json{{"n_patterns", counts.n_patterns},
                               {"n_seasonality", counts.n_seasonality},
                               {"runtime_ms", runtime}}
                         .dump()
                  << '\n';
    }
    return 0;
}

int cmd_mine_baseline(const GlobalOptions& g) {
    const auto db = load_input(g);
    const double theta = parse_ratio(g.theta);
    const auto start = std::chrono::steady_clock::now();
    const auto patterns = sgp::mine_temporal(db, theta, msgp_options(g).runs);
    const double runtime = elapsed_ms(start);
    if (g.output == "table") {
        std::cout << sgp::format_temporal_table(patterns, db.attributes());
        std::cout << "\npatterns: " << patterns.size() << "  runtime_ms: " << sgp::format_double(runtime) << '\n';
    } else {
        for (const auto& p : patterns) std::cout << sgp::temporal_pattern_to_json(p, db.attributes()).dump() << '\n';
        std::cout << sgp::Json{{"n_patterns", patterns.size()}, {"runtime_ms", runtime}}.dump() << '\n';
    }
    return 0;
}

int cmd_mine_periodic(const GlobalOptions& g, std::optional<double> min_ra) {
    if (g.input.empty()) throw std::invalid_argument("--input (a transform JSON dump) is required");
    std::ifstream in(g.input);
    if (!in) throw sgp::DataError("cannot read '" + g.input + "'");
    sgp::Json doc;
    try {
        in >> doc;
    } catch (const sgp::Json::exception& e) {
        throw sgp::DataError(std::string("invalid JSON: ") + e.what());
    }
    const auto sequences = sgp::sequences_from_gamma_json(doc);
    sgp::MinerOptions options;
    options.min_sup = g.min_sup_abs.value_or(1);
    options.min_ra = min_ra.value_or(sequences.empty() ? 1.0 : 1.0 / static_cast<double>(sequences.size()));
    options.threads = g.threads;
    const auto patterns = sgp::mine(sequences, options);
    std::cout << sgp::periodic_patterns_to_json(patterns, sequences).dump() << '\n';
    return 0;
}

int cmd_bench(const GlobalOptions& g, const std::vector<std::string>& theta_text,
              const std::vector<std::string>& algorithm_text, const std::string& plot_data, int repetitions) {
    const auto db = load_input(g);
    std::vector<double> thetas;
    for (const auto& t : theta_text) thetas.push_back(parse_ratio(t));
    std::vector<sgp::Algorithm> algorithms;
    for (const auto& a : algorithm_text) algorithms.push_back(sgp::parse_algorithm(a));

    sgp::SweepOptions options;
    options.msgp = msgp_options(g);
    options.repetitions = repetitions;
    const auto records = sgp::run_sweep(db, thetas, algorithms, options);
    for (const auto& r : records) {
        if (!r.ok()) {
            std::cerr << "warning: " << sgp::algorithm_name(r.algorithm) << " at theta " << r.theta
                      << " failed: " << r.error << '\n';
        }
    }
    if (plot_data.empty()) {
        sgp::write_plot_data(records, std::cout);
    } else if (!records.empty()) {
        sgp::emit_plot_data(records, plot_data);
    }
    return 0;
}

// "1+,3-@2-5:0.8": attributes 1 (up) and 3 (down), periods d2..d5, probability 0.8.
sgp::PlantedPattern parse_plant(const std::string& text) {
    const auto at = text.find('@');
    const auto colon = text.rfind(':');
    const auto dash = text.find('-', at == std::string::npos ? 0 : at);
    if (at == std::string::npos || colon == std::string::npos || dash == std::string::npos || colon < dash) {
        throw std::invalid_argument("plant must look like 1+,3-@2-5:0.8");
    }
    sgp::PlantedPattern plant;
    std::stringstream items(text.substr(0, at));
    std::string item;
    while (std::getline(items, item, ',')) {
        if (item.size() < 2 || (item.back() != '+' && item.back() != '-')) {
            throw std::invalid_argument("plant item '" + item + "' must be an attribute number followed by + or -");
        }
        const auto attr = std::stoul(item.substr(0, item.size() - 1));
        if (attr == 0) throw std::invalid_argument("plant attributes are numbered from 1");
        plant.items.push_back({attr - 1, item.back() == '+' ? sgp::Direction::Up : sgp::Direction::Down});
    }
    plant.window_start = static_cast<std::uint32_t>(std::stoul(text.substr(at + 1, dash - at - 1)));
    plant.window_end = static_cast<std::uint32_t>(std::stoul(text.substr(dash + 1, colon - dash - 1)));
    plant.probability = parse_ratio(text.substr(colon + 1));
    return plant;
}

int cmd_synth(const GlobalOptions& g, std::size_t m, std::size_t n, const std::vector<std::string>& plants,
              const std::string& out) {
    if (!g.cycle_length) throw std::invalid_argument("synth needs --cycle-length");
    sgp::SyntheticSpec spec;
    spec.num_cycles = m;
    spec.cycle_length = *g.cycle_length;
    spec.num_attributes = n;
    for (const auto& p : plants) spec.plants.push_back(parse_plant(p));
    const auto db = sgp::generate_synthetic(spec, g.seed);
    if (out.empty()) {
        sgp::write_csv(db, std::cout);
    } else {
        sgp::save_database(db, out);
    }
    for (std::size_t k = 0; k < spec.plants.size(); ++k) {
        std::cerr << "plant " << plants[k] << ": present in " << sgp::count_plant_occurrences(db, spec.plants[k])
                  << " of " << db.num_cycles() << " cycles\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seasonal gradual pattern mining"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a key=value config file");

    GlobalOptions g;
    app.add_option("--input", g.input, "Input CSV (or transform JSON for mine-periodic)");
    app.add_option("--cycle-length", g.cycle_length, "Observations per cycle")->check(CLI::PositiveNumber);
    app.add_option("--label-column", g.label_column, "Column naming the period of each row");
    app.add_option("--attributes", g.attributes, "Numeric attribute columns")->delimiter(',');
    app.add_flag("--drop-missing,!--no-drop-missing", g.drop_missing, "Drop rows with missing values (default on)");
    app.add_option("--theta", g.theta, "Support threshold in (0,1], e.g. 0.5 or 2/3");
    app.add_option("--min-sup-abs", g.min_sup_abs, "Absolute per-sequence support")->check(CLI::PositiveNumber);
    app.add_option("--cross-boundary", g.cross_boundary, "Runs may span consecutive cycles")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_flag("--non-strict", g.non_strict, "Use >= / <= for variations (exploration only)");
    app.add_flag("--contiguous-only", g.contiguous_only, "Keep only cyclically contiguous seasons");
    app.add_flag("--all-seasons", g.all_seasons, "Report non-maximal seasons too");
    app.add_option("--min-items", g.min_items, "Minimum number of gradual items per pattern");
    app.add_flag("--prune-subsumed", g.prune_subsumed, "Drop patterns whose item set is inside an earlier one");
    app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* transform = app.add_subcommand("transform", "Print the derived run-sequence database");
    auto* mine = app.add_subcommand("mine", "Mine seasonal gradual patterns");
    auto* baseline = app.add_subcommand("mine-baseline", "Mine temporal gradual patterns");
    auto* periodic = app.add_subcommand("mine-periodic", "Mine periodic patterns from a transform JSON dump");
    std::optional<double> min_ra;
    periodic->add_option("--min-ra", min_ra, "Minimum sequence periodic ratio (default 1/|sequences|)");

    auto* bench = app.add_subcommand("bench", "Sweep thresholds and record counts and runtimes");
    std::vector<std::string> thetas;
    std::vector<std::string> algorithms{"msgp", "temporal"};
    std::string plot_data;
    int repetitions = 3;
    bench->add_option("--thetas", thetas, "Ascending thresholds")->delimiter(',')->required();
    bench->add_option("--algorithms", algorithms, "msgp,temporal")->delimiter(',');
    bench->add_option("--plot-data", plot_data, "Write the CSV here instead of stdout");
    bench->add_option("--reps", repetitions, "Repetitions per cell (median runtime)")->check(CLI::PositiveNumber);

    auto* synth = app.add_subcommand("synth", "Generate a synthetic database");
    std::size_t synth_m = 0;
    std::size_t synth_n = 0;
    std::vector<std::string> plants;
    std::string synth_out;
    synth->add_option("--m", synth_m, "Number of cycles")->required();
    synth->add_option("--n", synth_n, "Number of attributes")->required();
    synth->add_option("--plant", plants, "Planted pattern, e.g. 1+,3-@2-5:0.8 (repeatable)");
    synth->add_option("--out", synth_out, "Write CSV plus sidecar here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*transform) return cmd_transform(g);
        if (*mine) return cmd_mine(g);
        if (*baseline) return cmd_mine_baseline(g);
        if (*periodic) return cmd_mine_periodic(g, min_ra);
        if (*bench) return cmd_bench(g, thetas, algorithms, plot_data, repetitions);
        if (*synth) return cmd_synth(g, synth_m, synth_n, plants, synth_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sgp::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
