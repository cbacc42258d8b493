#ifndef NAIL_ENGINE_HPP_
#define NAIL_ENGINE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nail/direction.hpp"

// A small deterministic interpreter for declarative text-adventure games.
// Games are JSON documents; see docs/game_format.md.
namespace nail::engine {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Condition {
  enum class Kind { kFlag, kNotFlag, kState, kHolding, kNotHolding, kAt };
  Kind kind = Kind::kFlag;
  std::string subject;  // flag name, object id or room id
  std::string key;      // state key for kState: open, locked or on
  bool value = true;
};

struct Effect {
  enum class Kind { kSetFlag, kClearFlag, kSetState, kMove, kPrompt, kDie, kFinish };
  Kind kind = Kind::kSetFlag;
  std::string subject;  // flag, object id or prompt id
  std::string key;      // state key, or destination for kMove
  bool value = true;
};

struct ExitSpec {
  std::string to;  // empty: always blocked
  std::vector<Condition> when;
  std::string blocked;  // message when a condition fails
};

struct RoomSpec {
  std::string room_id;
  std::string name;
  std::string description;
  std::map<Direction, ExitSpec> exits;
  bool is_dark = false;
  bool grue = false;  // moving in the dark here is fatal
  int score_on_first_visit = 0;
};

enum Attribute : unsigned {
  kOpenable = 1u << 0,
  kLockable = 1u << 1,
  kSwitchable = 1u << 2,
  kConsumable = 1u << 3,
};

struct VerbResponse {
  std::string verb;    // may be several words, e.g. "get out of"
  std::string prep;    // empty for verb-object
  std::string second;  // object id of the indirect object
  std::vector<Condition> when;
  std::string response;
  std::string else_response;  // empty: fall through to builtin handling
  std::vector<Effect> effects;
  int score = 0;
};

struct ObjectSpec {
  std::string object_id;
  std::vector<std::string> names;  // names[0] is canonical
  std::string location;            // room id, "inventory", object id or "nowhere"
  bool portable = false;
  unsigned attributes = 0;
  bool container = false;
  bool light_source = false;
  bool listed = true;  // appears as "There is ... here." in room text
  std::string article = "a";
  std::string key;     // object id that locks and unlocks this one
  bool initially_open = false;
  bool initially_locked = false;
  bool initially_on = false;
  std::string examine_text;
  int take_score = 0;
  std::vector<VerbResponse> verb_responses;

  const std::string& canonical() const { return names.front(); }
};

struct PromptAnswer {
  std::string response;
  std::vector<Effect> effects;
  int score = 0;
};

struct PromptSpec {
  enum class Kind { kYesNo, kRestart };
  std::string id;
  Kind kind = Kind::kYesNo;
  std::string text;
  PromptAnswer yes;
  PromptAnswer no;
};

struct FlavorText {
  std::string text;
  double probability = 0.0;
};

struct GameSpec {
  std::string game_id;
  std::string title;
  std::vector<RoomSpec> rooms;
  std::vector<ObjectSpec> objects;
  std::set<std::string> vocabulary;
  std::vector<std::string> canned_failures;
  int max_score = 0;
  std::string start_room;
  bool supports_take_all = true;
  std::map<std::string, std::vector<FlavorText>> flavor_texts;
  std::vector<PromptSpec> prompts;
  std::set<std::string> initial_flags;

  const RoomSpec* find_room(std::string_view id) const;
  const ObjectSpec* find_object(std::string_view id) const;
  const PromptSpec* find_prompt(std::string_view id) const;
  // Every score event and its value, keyed by a stable event id.
  std::map<std::string, int> score_events() const;
};

// Parses and validates a game document. Throws ParseError or ValidationError.
GameSpec load_game(std::string_view spec_text);
GameSpec load_game_file(const std::string& path);

struct ObjectState {
  bool open = false;
  bool locked = false;
  bool on = false;
};

inline constexpr std::string_view kInventory = "inventory";
inline constexpr std::string_view kNowhere = "nowhere";

struct GameState {
  std::shared_ptr<const GameSpec> spec;
  std::string player_room;
  std::map<std::string, std::string> object_locations;
  std::map<std::string, ObjectState> object_states;
  std::set<std::string> flags;
  int score = 0;
  int moves = 0;
  std::mt19937_64 rng;
  std::uint64_t seed = 0;
  int restarts = 0;
  std::set<std::string> visited;
  std::set<std::string> fired_events;
  std::set<std::string> handled;  // objects the player has held at least once
  std::optional<std::string> pending_prompt;
  bool finished = false;
};

struct Observation {
  std::string text;
  int score_delta = 0;
  int moves = 0;

  bool operator==(const Observation&) const = default;
};

struct GroundTruth {
  std::string player_room;
  std::vector<std::string> inventory;  // object ids, sorted
  std::map<std::string, std::string> object_places;
  std::set<std::string> visited;
  int score = 0;

  bool operator==(const GroundTruth&) const = default;
};

std::pair<GameState, Observation> reset(std::shared_ptr<const GameSpec> spec,
                                        std::uint64_t seed);
Observation step(GameState& state, std::string_view action);
GroundTruth introspect(const GameState& state);

// The restart prompt shown after death.
inline constexpr std::string_view kRestartPrompt =
    "Would you like to RESTART, RESTORE a saved game or QUIT?";

// Fixed engine messages with their expected validity label, used to keep the
// classifier corpus honest about the engine's own vocabulary.
struct BuiltinMessage {
  std::string text;
  bool success;
};
const std::vector<BuiltinMessage>& builtin_messages();

}  // namespace nail::engine

#endif  // NAIL_ENGINE_HPP_
