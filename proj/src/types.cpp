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

#include "sgp/types.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace sgp {

PeriodLabel parse_period_label(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == 'd' || digits.front() == 'D')) digits.remove_prefix(1);
    std::uint32_t index = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || index == 0) {
        throw DataError("invalid period label '" + std::string(text) + "'");
    }
    return PeriodLabel{index};
}

std::string item_name(const GradualItem& item, std::span<const std::string> attributes) {
    const std::string& attr = attributes[item.attribute];
    return attr + (item.direction == Direction::Up ? "^+" : "^-");
}

GradualItem parse_item_name(std::string_view text, std::span<const std::string> attributes) {
    if (text.size() < 3 || text[text.size() - 2] != '^') {
        throw DataError("invalid gradual item '" + std::string(text) + "'");
    }
    const char sign = text.back();
    if (sign != '+' && sign != '-') throw DataError("invalid gradual item '" + std::string(text) + "'");
    const std::string_view attr = text.substr(0, text.size() - 2);
    for (std::size_t i = 0; i < attributes.size(); ++i) {
        if (attributes[i] == attr) return {i, sign == '+' ? Direction::Up : Direction::Down};
    }
    throw DataError("unknown attribute '" + std::string(attr) + "'");
}

std::string_view direction_name(Direction d) { return d == Direction::Up ? "up" : "down"; }

Direction parse_direction(std::string_view text) {
    if (text == "up" || text == "+") return Direction::Up;
    if (text == "down" || text == "-") return Direction::Down;
    throw DataError("invalid direction '" + std::string(text) + "'");
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

}  // namespace sgp
