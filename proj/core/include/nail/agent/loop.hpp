#ifndef NAIL_AGENT_LOOP_HPP_
#define NAIL_AGENT_LOOP_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nail/agent/context.hpp"
#include "nail/agent/module.hpp"
#include "nail/engine.hpp"
#include "nail/kg.hpp"

namespace nail::agent {

struct AgentConfig {
  std::vector<std::string> modules = default_module_names();
  EagernessTable eagerness;
  int step_budget = kDefaultStepBudget;

  // {"modules": [...], "eagerness": {"navigator": 0.1, ...}, "step_budget": N}
  // Missing keys keep their defaults. Throws on unknown module or key names.
  static AgentConfig from_json(std::string_view document);
  static AgentConfig load_file(const std::string& path);
};

struct StepEvent {
  int step = 0;
  std::string module;
  std::string action;
  engine::Observation observation;
  double p_valid = 0.0;
  int grant = 0;  // 1-based index of the grant the step belongs to
};

// Called after every engine step. Ground truth goes to the observer only.
using Observer = std::function<void(const AgentContext&, const engine::GameState&, const StepEvent&)>;

struct EpisodeResult {
  std::string game_id;
  std::uint64_t seed = 0;
  int score = 0;
  int max_score = 0;
  int steps = 0;
  bool finished = false;
  int grants = 0;
  int blocked_emissions = 0;  // actions a module emitted despite blocked words
  std::string transcript;
  kg::KnowledgeGraph kg;

  double normalized_score() const {
    return max_score > 0 ? static_cast<double>(score) / max_score : 0.0;
  }
};

// Winner-take-all arbitration until the step budget runs out or the game ends.
EpisodeResult run_episode(std::shared_ptr<const engine::GameSpec> spec, std::uint64_t seed,
                          const Resources& res, const AgentConfig& config = {},
                          const Observer& observer = {});

// The baseline's action set.
const std::vector<std::string>& random_agent_actions();
EpisodeResult run_random_episode(std::shared_ptr<const engine::GameSpec> spec, std::uint64_t seed,
                                 int step_budget = kDefaultStepBudget, const Observer& observer = {});

}  // namespace nail::agent

#endif  // NAIL_AGENT_LOOP_HPP_
