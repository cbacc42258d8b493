#include "nail/direction.hpp"

#include <string>
#include <utility>

namespace nail {

namespace {

constexpr std::array<std::string_view, kNumDirections> kNames = {
    "north", "south", "east", "west", "northeast", "northwest",
    "southeast", "southwest", "up", "down", "enter", "exit",
};

}  // namespace

std::string_view to_string(Direction d) {
  return kNames[static_cast<int>(d)];
}

std::optional<Direction> parse_direction(std::string_view word) {
  for (int i = 0; i < kNumDirections; ++i) {
    if (kNames[i] == word) return static_cast<Direction>(i);
  }
  static constexpr std::pair<std::string_view, Direction> kShort[] = {
      {"n", Direction::kNorth},      {"s", Direction::kSouth},
      {"e", Direction::kEast},       {"w", Direction::kWest},
      {"ne", Direction::kNortheast}, {"nw", Direction::kNorthwest},
      {"se", Direction::kSoutheast}, {"sw", Direction::kSouthwest},
      {"u", Direction::kUp},         {"d", Direction::kDown},
      {"in", Direction::kEnter},     {"out", Direction::kExit},
  };
  for (const auto& [name, dir] : kShort) {
    if (name == word) return dir;
  }
  return std::nullopt;
}

std::optional<Direction> direction_mentioned_by(std::string_view word) {
  for (int i = 0; i < kNumDirections; ++i) {
    if (kNames[i] == word) return static_cast<Direction>(i);
  }
  static constexpr std::pair<std::string_view, Direction> kSynonyms[] = {
      {"northward", Direction::kNorth},  {"northwards", Direction::kNorth},
      {"southward", Direction::kSouth},  {"southwards", Direction::kSouth},
      {"eastward", Direction::kEast},    {"eastwards", Direction::kEast},
      {"westward", Direction::kWest},    {"westwards", Direction::kWest},
      {"upward", Direction::kUp},        {"upwards", Direction::kUp},
      {"upstairs", Direction::kUp},      {"downward", Direction::kDown},
      {"downwards", Direction::kDown},   {"downstairs", Direction::kDown},
      {"inside", Direction::kEnter},     {"outside", Direction::kExit},
  };
  for (const auto& [name, dir] : kSynonyms) {
    if (name == word) return dir;
  }
  return std::nullopt;
}

Direction opposite(Direction d) {
  switch (d) {
    case Direction::kNorth: return Direction::kSouth;
    case Direction::kSouth: return Direction::kNorth;
    case Direction::kEast: return Direction::kWest;
    case Direction::kWest: return Direction::kEast;
    case Direction::kNortheast: return Direction::kSouthwest;
    case Direction::kNorthwest: return Direction::kSoutheast;
    case Direction::kSoutheast: return Direction::kNorthwest;
    case Direction::kSouthwest: return Direction::kNortheast;
    case Direction::kUp: return Direction::kDown;
    case Direction::kDown: return Direction::kUp;
    case Direction::kEnter: return Direction::kExit;
    case Direction::kExit: return Direction::kEnter;
  }
  return d;
}

}  // namespace nail
