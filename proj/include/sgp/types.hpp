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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgp {

/// Raised for malformed or unusable input data (as opposed to bad parameters,
/// which raise std::invalid_argument).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Position of an observation inside its cycle, 1-based. Rendered as "d<index>".
struct PeriodLabel {
    std::uint32_t index = 1;

    std::string display() const { return "d" + std::to_string(index); }
    auto operator<=>(const PeriodLabel&) const = default;
};

/// Parses "d3" (or a bare "3") back into a label. Throws DataError on anything else.
PeriodLabel parse_period_label(std::string_view text);

enum class Direction : std::uint8_t { Up, Down };

inline Direction opposite(Direction d) { return d == Direction::Up ? Direction::Down : Direction::Up; }

/// An attribute paired with a variation direction. Ordered a1^+ < a1^- < a2^+ < ...
struct GradualItem {
    std::size_t attribute = 0;
    Direction direction = Direction::Up;

    auto operator<=>(const GradualItem&) const = default;
};

/// Position of `item` in the canonical 2n ordering.
inline std::size_t canonical_index(const GradualItem& item) {
    return item.attribute * 2 + (item.direction == Direction::Up ? 0 : 1);
}

inline GradualItem item_from_canonical_index(std::size_t index) {
    return {index / 2, index % 2 == 0 ? Direction::Up : Direction::Down};
}

/// "age^+" / "age^-".
std::string item_name(const GradualItem& item, std::span<const std::string> attributes);

/// Inverse of item_name. Throws DataError if the attribute is unknown or the suffix is missing.
GradualItem parse_item_name(std::string_view text, std::span<const std::string> attributes);

std::string_view direction_name(Direction d);  // "up" / "down"
Direction parse_direction(std::string_view text);

/// Non-fatal messages produced while loading or transforming data.
struct Diagnostics {
    std::vector<std::string> warnings;

    void warn(std::string message) { warnings.push_back(std::move(message)); }
};

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace sgp
