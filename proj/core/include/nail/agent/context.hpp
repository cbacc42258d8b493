#ifndef NAIL_AGENT_CONTEXT_HPP_
#define NAIL_AGENT_CONTEXT_HPP_

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nail/direction.hpp"
#include "nail/engine.hpp"
#include "nail/kg.hpp"
#include "nail/lm.hpp"
#include "nail/textutils.hpp"
#include "nail/validity.hpp"

namespace nail::agent {

inline constexpr int kDefaultStepBudget = 1000;

// Shared, read-only resources an agent needs.
struct Resources {
  const validity::ValidityModel* validity = nullptr;
  const lm::NGramModel* lm = nullptr;
  const std::vector<std::string>* verbs = nullptr;
  const text::PosLexicon* lexicon = nullptr;
};

// A move into darkness whose destination is not known yet.
struct DarkArrival {
  int from = 0;
  Direction direction = Direction::kNorth;
};

struct AgentContext {
  kg::KnowledgeGraph kg;
  engine::Observation last_observation;
  double last_p_valid = 1.0;
  std::string last_action;
  Resources res;
  std::mt19937_64 rng;
  int step_count = 0;
  int step_budget = kDefaultStepBudget;

  // Observations produced during the most recent grant, in order.
  std::vector<engine::Observation> grant_observations;
  // Text per location that the Examiner has not mined for noun phrases yet.
  std::map<int, std::vector<std::string>> narrative;
  // (location, epoch) pairs whose description has been queued as narrative.
  std::set<std::pair<int, int>> narrated;
  std::optional<DarkArrival> dark_arrival;
  // Bumped whenever the game goes from lit to dark.
  int dark_spell = 0;
  bool in_dark = false;

  int budget_left() const { return step_budget - step_count; }
  int current() const { return kg.current_location(); }
  // Pending narrative for the current location.
  bool has_narrative() const;
  void add_narrative(int location, std::string text);
  std::vector<std::string> take_narrative(int location);
  // Starts a fresh location from a description text.
  int add_location_from(const std::string& text);
  // Makes a known location current. Its description is mined again on the
  // first visit of each epoch, since a restart puts objects back.
  void enter_location(int id, const std::string& text);
};

// "It is pitch black ..." and friends.
bool is_dark_text(std::string_view text);
// The restart, restore, quit prompt.
bool is_restart_prompt(std::string_view text);
// First line of a room description, used as the location name.
std::string first_line(std::string_view text);
// Name an action should use for an entity: the head noun when it is unique
// among the given entities, otherwise the entity's shortest name.
std::string action_name(const kg::KnowledgeGraph& kg, int entity_id, const std::vector<int>& scope);
// Entities at the current location plus the inventory.
std::vector<int> nearby_entities(const kg::KnowledgeGraph& kg);

}  // namespace nail::agent

#endif  // NAIL_AGENT_CONTEXT_HPP_
