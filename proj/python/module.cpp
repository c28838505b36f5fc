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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sgp/baseline.hpp"
#include "sgp/bench.hpp"
#include "sgp/gradual.hpp"
#include "sgp/ingest.hpp"
#include "sgp/msgp.hpp"
#include "sgp/report.hpp"

namespace py = pybind11;
using namespace sgp;

namespace {

RunOptions run_options(bool cross_boundary, bool non_strict) {
    RunOptions r;
    r.cross_boundary = cross_boundary;
    r.non_strict = non_strict;
    return r;
}

std::string seasonal_json(const std::vector<SeasonalGradualPattern>& patterns, const std::vector<std::string>& attrs) {
    Json out = Json::array();
    for (const auto& g : patterns) out.push_back(seasonal_pattern_to_json(g, attrs));
    return out.dump();
}

// (attribute index, "up"/"down") pairs, window bounds, probability.
using PlantTuple = std::tuple<std::vector<std::pair<std::size_t, std::string>>, std::uint32_t, std::uint32_t, double>;

PlantedPattern to_plant(const PlantTuple& t) {
    PlantedPattern p;
    for (const auto& [attribute, direction] : std::get<0>(t)) p.items.push_back({attribute, parse_direction(direction)});
    std::sort(p.items.begin(), p.items.end());
    p.window_start = std::get<1>(t);
    p.window_end = std::get<2>(t);
    p.probability = std::get<3>(t);
    return p;
}

}  // namespace

PYBIND11_MODULE(_sgp, m) {
    m.doc() = "Seasonal gradual pattern mining engine";
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

    py::class_<TemporalSequenceDatabase>(m, "Database")
        .def(py::init<std::vector<std::string>, std::size_t, const std::vector<std::vector<double>>&>(),
             py::arg("attributes"), py::arg("cycle_length"), py::arg("rows"))
        .def_property_readonly("attributes", &TemporalSequenceDatabase::attributes)
        .def_property_readonly("num_cycles", &TemporalSequenceDatabase::num_cycles)
        .def_property_readonly("cycle_length", &TemporalSequenceDatabase::cycle_length)
        .def_property_readonly("period_names", &TemporalSequenceDatabase::period_names)
        .def("series",
             [](const TemporalSequenceDatabase& db, std::size_t a) {
                 const auto s = db.series(a);
                 return std::vector<double>(s.begin(), s.end());
             })
        .def("to_csv",
             [](const TemporalSequenceDatabase& db) {
                 std::ostringstream out;
                 write_csv(db, out);
                 return out.str();
             })
        .def("__eq__", [](const TemporalSequenceDatabase& a, const TemporalSequenceDatabase& b) { return a == b; })
        .def("__repr__", [](const TemporalSequenceDatabase& db) {
            return "<Database m=" + std::to_string(db.num_cycles()) + " l=" + std::to_string(db.cycle_length()) +
                   " n=" + std::to_string(db.num_attributes()) + ">";
        });

    m.def(
        "load_csv",
        [](const std::string& path, std::optional<std::size_t> cycle_length, std::optional<std::string> label_column,
           std::vector<std::string> attributes, bool drop_missing) {
            IngestConfig config{cycle_length, std::move(label_column), std::move(attributes), drop_missing};
            Diagnostics diag;
            auto db = load_csv(path, config, &diag);
            return std::make_pair(std::move(db), diag.warnings);
        },
        py::arg("path"), py::arg("cycle_length") = py::none(), py::arg("label_column") = py::none(),
        py::arg("attributes") = std::vector<std::string>{}, py::arg("drop_missing") = true);

    m.def(
        "transform_json",
        [](const TemporalSequenceDatabase& db, bool cross_boundary, bool non_strict) {
            return gamma_to_json(build_gamma(db, run_options(cross_boundary, non_strict))).dump();
        },
        py::arg("db"), py::arg("cross_boundary") = true, py::arg("non_strict") = false);

    m.def(
        "transform_text",
        [](const TemporalSequenceDatabase& db, bool cross_boundary, bool non_strict) {
            return format_gamma_text(build_gamma(db, run_options(cross_boundary, non_strict)));
        },
        py::arg("db"), py::arg("cross_boundary") = true, py::arg("non_strict") = false);

    m.def(
        "mine_json",
        [](const TemporalSequenceDatabase& db, double theta, std::optional<std::size_t> min_sup_abs,
           bool cross_boundary, bool non_strict, bool contiguous_only, bool all_seasons, std::size_t min_items,
           bool prune_subsumed, unsigned threads) {
            MsgpOptions o;
            o.runs = run_options(cross_boundary, non_strict);
            o.min_sup_abs = min_sup_abs;
            o.contiguous_only = contiguous_only;
            o.all_seasons = all_seasons;
            o.min_items = min_items;
            o.prune_subsumed = prune_subsumed;
            o.threads = threads;
            std::vector<SeasonalGradualPattern> patterns;
            {
                py::gil_scoped_release release;
                patterns = mine_seasonal(db, theta, o);
            }
            return seasonal_json(patterns, db.attributes());
        },
        py::arg("db"), py::arg("theta"), py::arg("min_sup_abs") = py::none(), py::arg("cross_boundary") = true,
        py::arg("non_strict") = false, py::arg("contiguous_only") = false, py::arg("all_seasons") = false,
        py::arg("min_items") = 1, py::arg("prune_subsumed") = false, py::arg("threads") = 1);

    m.def(
        "mine_baseline_json",
        [](const TemporalSequenceDatabase& db, double theta, bool cross_boundary, bool non_strict) {
            std::vector<TemporalGradualPattern> patterns;
            {
                py::gil_scoped_release release;
                patterns = mine_temporal(db, theta, run_options(cross_boundary, non_strict));
            }
            Json out = Json::array();
            for (const auto& p : patterns) out.push_back(temporal_pattern_to_json(p, db.attributes()));
            return out.dump();
        },
        py::arg("db"), py::arg("theta"), py::arg("cross_boundary") = true, py::arg("non_strict") = false);

    m.def(
        "bench_csv",
        [](const TemporalSequenceDatabase& db, const std::vector<double>& thetas,
           const std::vector<std::string>& algorithms, int repetitions) {
            std::vector<Algorithm> algs;
            for (const auto& a : algorithms) algs.push_back(parse_algorithm(a));
            SweepOptions options;
            options.repetitions = repetitions;
            std::vector<BenchRecord> records;
            {
                py::gil_scoped_release release;
                records = run_sweep(db, thetas, algs, options);
            }
            std::ostringstream out;
            write_plot_data(records, out);
            return out.str();
        },
        py::arg("db"), py::arg("thetas"), py::arg("algorithms") = std::vector<std::string>{"msgp", "temporal"},
        py::arg("repetitions") = 3);

    m.def(
        "generate_synthetic",
        [](std::size_t m_cycles, std::size_t cycle_length, std::size_t n, const std::vector<PlantTuple>& plants,
           std::uint64_t seed) {
            SyntheticSpec spec{m_cycles, cycle_length, n, {}};
            for (const auto& p : plants) spec.plants.push_back(to_plant(p));
            auto db = generate_synthetic(spec, seed);
            std::vector<std::size_t> realized;
            for (const auto& p : spec.plants) realized.push_back(count_plant_occurrences(db, p));
            return std::make_pair(std::move(db), realized);
        },
        py::arg("m"), py::arg("cycle_length"), py::arg("n"), py::arg("plants") = std::vector<PlantTuple>{},
        py::arg("seed") = 0);

    m.def("min_sup_for", &min_sup_for, py::arg("theta"), py::arg("num_cycles"));
}
