#ifndef NAIL_DIRECTION_HPP_
#define NAIL_DIRECTION_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace nail {

// The twelve canonical navigation actions.
enum class Direction : int {
  kNorth, kSouth, kEast, kWest,
  kNortheast, kNorthwest, kSoutheast, kSouthwest,
  kUp, kDown, kEnter, kExit,
};

inline constexpr int kNumDirections = 12;

inline constexpr std::array<Direction, kNumDirections> kAllDirections = {
    Direction::kNorth, Direction::kSouth, Direction::kEast,
    Direction::kWest, Direction::kNortheast, Direction::kNorthwest,
    Direction::kSoutheast, Direction::kSouthwest, Direction::kUp,
    Direction::kDown, Direction::kEnter, Direction::kExit,
};

std::string_view to_string(Direction d);

// Accepts canonical names and the usual abbreviations (n, ne, u, ...).
std::optional<Direction> parse_direction(std::string_view word);

// Canonical names plus words that descriptions use to point at an exit
// ("upward", "downstairs", "inside", ...).
std::optional<Direction> direction_mentioned_by(std::string_view word);

Direction opposite(Direction d);

}  // namespace nail

#endif  // NAIL_DIRECTION_HPP_
