#ifndef NAIL_AGENT_MODULES_HPP_
#define NAIL_AGENT_MODULES_HPP_

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nail/agent/module.hpp"

namespace nail::agent {

// Examines every new noun phrase found in a location's narrative.
class Examiner : public DecisionModule {
 public:
  explicit Examiner(double eagerness) : DecisionModule("Examiner"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;
  int max_actions_per_grant() const override { return 30; }

 private:
  double eagerness_;
};

// Parsed line of an itemized "take all" response.
struct TakeAllItem {
  std::string name;
  std::string response;
};
// Splits "name: response" lines. Returns nothing when the response is not
// itemized.
std::vector<TakeAllItem> parse_take_all(std::string_view response);
// Object names from an inventory listing.
std::vector<std::string> parse_inventory(std::string_view response);

// Issues one "take all" on first arrival at a location.
class Hoarder : public DecisionModule {
 public:
  explicit Hoarder(double eagerness) : DecisionModule("Hoarder"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;
  int max_actions_per_grant() const override { return 2; }
  bool feeds_narrative() const override { return false; }

  // Applies a "take all" response to the knowledge graph.
  static void absorb(AgentContext& ctx, std::string_view response);

 private:
  double eagerness_;
  std::set<std::pair<int, int>> done_;  // (location, epoch)
};

// The ten verb-object-preposition-object templates, with x and y slots.
const std::vector<std::string>& pair_templates();

// Tries the best-ranked untried action built from nearby entities.
class Interactor : public DecisionModule {
 public:
  explicit Interactor(double eagerness) : DecisionModule("Interactor"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;

  // Ranked candidates for the current location, before filtering.
  static std::vector<std::string> candidates(const AgentContext& ctx);
  // Remaining candidates after filtering, best first.
  std::vector<std::string> remaining(const AgentContext& ctx) const;

 private:
  struct Cache {
    std::string key;
    std::vector<std::string> ranked;
    int consumed = 0;
    std::size_t progress = 0;          // valid interaction records seen here
    std::vector<std::string> retry;    // failed actions worth another go
    std::set<std::string> retried;
  };
  std::string cache_key(const AgentContext& ctx) const;
  const Cache& refresh(const AgentContext& ctx) const;
  bool usable(const AgentContext& ctx, const std::string& action) const;

  double eagerness_;
  mutable Cache cache_;
  mutable std::size_t cursor_ = 0;  // first possibly usable entry of cache_.ranked
};

// Explores the twelve canonical directions and maps what it finds.
class Navigator : public DecisionModule {
 public:
  explicit Navigator(double eagerness) : DecisionModule("Navigator"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;
  int max_actions_per_grant() const override { return 2; }
  bool feeds_narrative() const override { return false; }

  // Direction the module would try next from the current location.
  static Direction choose_direction(const AgentContext& ctx);

 private:
  double eagerness_;
};

// Answers the restart prompt.
class Restart : public DecisionModule {
 public:
  explicit Restart(double eagerness) : DecisionModule("Restart"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;
  bool feeds_narrative() const override { return false; }

 private:
  double eagerness_;
};

// Answers yes/no questions at random.
class YesNo : public DecisionModule {
 public:
  explicit YesNo(double eagerness) : DecisionModule("YesNo"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;

  static bool is_yes_no_prompt(std::string_view text);

 private:
  double eagerness_;
};

// Turns on a light when the game says it is dark.
class Darkness : public DecisionModule {
 public:
  explicit Darkness(double eagerness) : DecisionModule("Darkness"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;
  int max_actions_per_grant() const override { return 2; }
  bool feeds_narrative() const override { return false; }

  static std::string light_action(const AgentContext& ctx);

 private:
  double eagerness_;
  int tried_spell_ = -1;
};

// Follows "You'll have to X first" style hints.
class YouHaveTo : public DecisionModule {
 public:
  explicit YouHaveTo(double eagerness) : DecisionModule("YouHaveTo"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;

  // The hinted action in a response, if any.
  static std::optional<std::string> hint(std::string_view text);

 private:
  std::optional<std::string> pending(const AgentContext& ctx) const;

  double eagerness_;
  std::set<std::tuple<int, int, std::string>> done_;  // (location, epoch, action)
};

// Random verb and entity pairs when nothing better is on offer.
class Idler : public DecisionModule {
 public:
  explicit Idler(double eagerness) : DecisionModule("Idler"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;

 private:
  double eagerness_;
};

// Only ever looks. Baseline for ablations.
class LookOnly : public DecisionModule {
 public:
  explicit LookOnly(double eagerness) : DecisionModule("LookOnly"), eagerness_(eagerness) {}
  double eagerness(const AgentContext& ctx) const override;
  ActionIterator take_control(AgentContext& ctx) override;
  bool feeds_narrative() const override { return false; }

 private:
  double eagerness_;
};

}  // namespace nail::agent

#endif  // NAIL_AGENT_MODULES_HPP_
