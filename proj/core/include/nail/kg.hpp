#ifndef NAIL_KG_HPP_
#define NAIL_KG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nail/direction.hpp"

// The agent's world model: locations, entities, the connection graph,
// inventory, action records and words the game rejected.
namespace nail::kg {

inline constexpr double kSameLocationThreshold = 0.80;

enum class Tri : std::int8_t { kUnknown = -1, kFalse = 0, kTrue = 1 };

struct EntityState {
  Tri open = Tri::kUnknown;
  Tri locked = Tri::kUnknown;
  Tri on = Tri::kUnknown;
  Tri used = Tri::kUnknown;

  bool operator==(const EntityState&) const = default;
};

enum EntityAttribute : unsigned {
  kOpenable = 1u << 0,
  kLockable = 1u << 1,
  kSwitchable = 1u << 2,
};

// Where an entity is. Non-negative values are location ids.
inline constexpr int kInventory = -1;
inline constexpr int kNowhere = -2;

struct Entity {
  int entity_id = 0;
  std::vector<std::string> names;
  std::string description;
  std::vector<int> contained;
  EntityState state;
  unsigned attributes = 0;
  int place = kNowhere;

  const std::string& name() const { return names.front(); }
  bool operator==(const Entity&) const = default;
};

struct ActionRecord {
  std::string action;
  std::string response;
  double p_valid = 0.0;
  int epoch = 0;

  bool operator==(const ActionRecord&) const = default;
};

enum class NavStatus { kUntried, kFailed, kSucceeded };

struct NavAttempt {
  NavStatus status = NavStatus::kUntried;
  int to = -1;        // destination when succeeded
  int attempts = 0;
  int valid_records = 0;  // valid action records here when last attempted

  bool operator==(const NavAttempt&) const = default;
};

struct Location {
  int location_id = 0;
  std::string name;
  std::string description;
  std::vector<int> entities;
  std::vector<ActionRecord> action_records;
  std::map<Direction, NavAttempt> navigation;

  NavAttempt navigation_for(Direction d) const {
    auto it = navigation.find(d);
    return it == navigation.end() ? NavAttempt{} : it->second;
  }
  bool operator==(const Location&) const = default;
};

struct Connection {
  int from = 0;
  Direction direction = Direction::kNorth;
  int to = 0;

  auto operator<=>(const Connection&) const = default;
};

class KgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class KnowledgeGraph {
 public:
  // The first location added becomes current. Empty descriptions are rejected.
  Location& add_location(std::string name, std::string description);
  // Best fuzzy match at or above the same-location threshold; ties go to the
  // lowest id.
  std::optional<std::pair<int, double>> find_location(std::string_view description) const;
  // Records a directed edge. Reverse edges are never inferred.
  void connect(int from, Direction direction, int to);

  // Adds an entity at a location or the inventory, merging with an entity at
  // the same place whose name is a token subset of the new one or vice versa.
  Entity& add_entity(int place, const std::string& name, const std::string& description);
  void move_entity(int entity_id, int place);

  void record_action(int location_id, std::string action, std::string response, double p_valid);
  // True iff the most recent record of action at the location was invalid.
  bool has_failed(int location_id, std::string_view action) const;
  // True iff the action was recorded at the location in the given epoch.
  bool attempted(int location_id, std::string_view action, int epoch) const;

  // Structural effects of common verbs, applied only when p_valid clears the
  // validity threshold.
  void apply_action_effects(std::string_view action, std::string_view response, double p_valid);

  void note_unrecognized(std::string_view word);
  bool is_blocked(std::string_view action) const;

  // A restart empties the inventory and opens a new epoch.
  void begin_epoch();
  int epoch() const { return epoch_; }

  bool has_location(int id) const { return id >= 0 && id < static_cast<int>(locations_.size()); }
  const Location& location(int id) const;
  Location& location(int id);
  const std::vector<Location>& locations() const { return locations_; }
  const Entity& entity(int id) const { return entities_.at(static_cast<std::size_t>(id)); }
  Entity& entity(int id) { return entities_.at(static_cast<std::size_t>(id)); }
  const std::vector<Entity>& entities() const { return entities_; }
  const std::set<Connection>& connections() const { return connections_; }
  int current_location() const { return current_; }
  void set_current(int id);
  const std::vector<int>& inventory() const { return inventory_; }
  const std::set<std::string>& unrecognized_words() const { return unrecognized_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Entity at a place one of whose names matches the phrase (articles
  // ignored), exact names first, then token subsets.
  std::optional<int> find_entity(int place, std::string_view phrase) const;

  bool operator==(const KnowledgeGraph&) const = default;

 private:
  friend KnowledgeGraph import_json(std::string_view document);

  std::vector<int>& place_list(int place);
  void detach(int entity_id);

  std::vector<Location> locations_;
  std::vector<Entity> entities_;
  std::set<Connection> connections_;
  int current_ = -1;
  std::vector<int> inventory_;
  std::set<std::string> unrecognized_;
  int epoch_ = 0;
  std::vector<std::string> warnings_;
};

enum class ExportFormat { kDot, kJson };

std::string export_dot(const KnowledgeGraph& kg);
std::string export_json(const KnowledgeGraph& kg);
std::string export_kg(const KnowledgeGraph& kg, ExportFormat format);
// Inverse of export_json; ids are preserved.
KnowledgeGraph import_json(std::string_view document);

}  // namespace nail::kg

#endif  // NAIL_KG_HPP_
