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

#include "sgp/report.hpp"

#include <algorithm>
#include <sstream>

namespace sgp {

namespace {

std::string join_labels(std::span<const PeriodLabel> labels) {
    std::string out = "{";
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k > 0) out += ',';
        out += labels[k].display();
    }
    return out + "}";
}

std::string join_items(std::span<const GradualItem> items, std::span<const std::string> attributes) {
    std::string out = "{";
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k > 0) out += ", ";
        out += item_name(items[k], attributes);
    }
    return out + "}";
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c == 0 ? "" : "  ") << (c + 1 == row.size() ? row[c] : pad(row[c], width[c]));
        }
        out << '\n';
    };
    emit(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    emit(rule);
    for (const auto& row : rows) emit(row);
    return out.str();
}

}  // namespace

Json item_to_json(const GradualItem& item, std::span<const std::string> attributes) {
    return Json{{"attribute", attributes[item.attribute]}, {"direction", direction_name(item.direction)}};
}

Json gamma_to_json(const GammaDatabase& gamma) {
    Json out = Json::array();
    for (const auto& e : gamma.entries) {
        Json runs = Json::array();
        for (const auto& run : e.runs) {
            Json labels = Json::array();
            for (const auto& l : run.labels) labels.push_back(l.display());
            runs.push_back(std::move(labels));
        }
        out.push_back(Json{{"item", item_to_json(e.item, gamma.attributes)}, {"runs", std::move(runs)}});
    }
    return out;
}

SequenceDatabase sequences_from_gamma_json(const Json& doc) {
    if (!doc.is_array()) throw DataError("transformed database must be a JSON array");
    SequenceDatabase db;
    try {
        for (const auto& entry : doc) {
            TransactionSequence s;
            const auto& item = entry.at("item");
            const Direction d = parse_direction(item.at("direction").get<std::string>());
            s.sid = item.at("attribute").get<std::string>() + (d == Direction::Up ? "^+" : "^-");
            for (const auto& run : entry.at("runs")) {
                Transaction t;
                for (const auto& label : run) t.push_back(parse_period_label(label.get<std::string>()).index);
                s.transactions.push_back(std::move(normalize(t)));
            }
            db.push_back(std::move(s));
        }
    } catch (const Json::exception& e) {
        throw DataError(std::string("malformed transformed database: ") + e.what());
    }
    return db;
}

Json periodic_patterns_to_json(std::span<const PeriodicPattern> patterns, const SequenceDatabase& db) {
    Json out = Json::array();
    for (const auto& p : patterns) {
        Json itemset = Json::array();
        for (Item i : p.itemset) itemset.push_back(PeriodLabel{i}.display());
        Json cover = Json::array();
        Json supports = Json::object();
        for (std::size_t k = 0; k < p.cover.size(); ++k) {
            cover.push_back(db[p.cover[k]].sid);
            supports[db[p.cover[k]].sid] = p.supports[k];
        }
        out.push_back(Json{{"itemset", std::move(itemset)},
                           {"cover", std::move(cover)},
                           {"supports", std::move(supports)},
                           {"ratio", p.ratio}});
    }
    return out;
}

Json seasonal_pattern_to_json(const SeasonalGradualPattern& pattern, std::span<const std::string> attributes) {
    Json items = Json::array();
    for (const auto& i : pattern.items) items.push_back(item_to_json(i, attributes));
    Json season = Json::array();
    for (const auto& l : pattern.season) season.push_back(l.display());
    Json per_item = Json::object();
    for (std::size_t k = 0; k < pattern.items.size(); ++k) {
        per_item[item_name(pattern.items[k], attributes)] = pattern.per_item_support[k];
    }
    return Json{{"items", std::move(items)},
                {"season", std::move(season)},
                {"support", pattern.support},
                {"per_item_support", std::move(per_item)}};
}

Json temporal_pattern_to_json(const TemporalGradualPattern& pattern, std::span<const std::string> attributes) {
    Json items = Json::array();
    for (const auto& i : pattern.items) items.push_back(item_to_json(i, attributes));
    return Json{{"items", std::move(items)}, {"support", pattern.support}, {"count", pattern.count}};
}

std::string format_seasonal_table(std::span<const SeasonalGradualPattern> patterns,
                                  std::span<const std::string> attributes) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : patterns) {
        std::string supports;
        for (std::size_t k = 0; k < g.items.size(); ++k) {
            if (k > 0) supports += ' ';
            supports += item_name(g.items[k], attributes) + "=" + std::to_string(g.per_item_support[k]);
        }
        rows.push_back({join_items(g.items, attributes), join_labels(g.season), format_double(g.support), supports});
    }
    return render_table({"items", "season", "support", "per-item"}, rows);
}

std::string format_temporal_table(std::span<const TemporalGradualPattern> patterns,
                                  std::span<const std::string> attributes) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : patterns) {
        rows.push_back({join_items(p.items, attributes), format_double(p.support), std::to_string(p.count)});
    }
    return render_table({"items", "support", "couples"}, rows);
}

}  // namespace sgp
