#ifndef NAIL_HARNESS_HPP_
#define NAIL_HARNESS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nail/agent/loop.hpp"
#include "nail/engine.hpp"
#include "nail/kg.hpp"
#include "nail/lm.hpp"
#include "nail/textutils.hpp"
#include "nail/validity.hpp"

// Evaluation tooling: progress dependencies, suite reports, ablations and
// offline checks over transcripts.
namespace nail::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- resources

struct ResourceOptions {
  std::string data_dir;             // holds data/, games/ and deps/
  std::string validity_model_path;  // trained from the corpus when empty
  std::string lm_model_path;        // trained from the corpus when empty
};

// Models and word lists an agent run needs, owned in one place.
struct ResourceBundle {
  validity::ValidityModel validity;
  lm::NGramModel lm;
  std::vector<std::string> verbs;
  text::PosLexicon lexicon;

  agent::Resources view() const { return {&validity, &lm, &verbs, &lexicon}; }
};

std::vector<std::string> load_word_list(const std::string& path);
ResourceBundle load_resources(const ResourceOptions& options);

// ---------------------------------------------------------------- dependencies

enum class DepKind { kEnt, kAct, kLoc, kInv };

std::string_view to_string(DepKind kind);

struct Dependency {
  DepKind kind = DepKind::kLoc;
  std::vector<std::string> names;  // EntDep: accepted entity names
  std::string room;                // EntDep and LocDep
  std::string action;              // ActDep: the action expected to produce the text
  std::string response;            // ActDep: required substring, matched case-insensitively
  std::string object;              // InvDep

  std::string describe() const;
};

// {"game": id, "dependencies": [{"kind": "EntDep", "names": [...], "loc": room},
//  {"kind": "ActDep", "action": a, "response": r}, {"kind": "LocDep", "loc": room},
//  {"kind": "InvDep", "object": id}]}
// Every id must exist in the game. Throws ConfigError.
std::vector<Dependency> parse_dependencies(std::string_view document, const engine::GameSpec& game);
std::vector<Dependency> load_dependencies(const std::string& path, const engine::GameSpec& game);

// Sticky satisfaction over a stream of episode events.
class DependencyTracker {
 public:
  explicit DependencyTracker(std::vector<Dependency> deps);

  void observe(const kg::KnowledgeGraph& kg, const engine::GroundTruth& truth, std::string_view observation);

  const std::vector<Dependency>& dependencies() const { return deps_; }
  const std::vector<bool>& satisfied() const { return satisfied_; }
  int satisfied_count() const;
  int satisfied_count(DepKind kind) const;
  int total(DepKind kind) const;

 private:
  std::vector<Dependency> deps_;
  std::vector<bool> satisfied_;
};

struct DepEvent {
  const kg::KnowledgeGraph* kg = nullptr;
  engine::GroundTruth truth;
  std::string observation;
};

std::vector<bool> check_dependencies(const std::vector<Dependency>& deps, const std::vector<DepEvent>& events);

// ---------------------------------------------------------------- suites

struct SuiteGame {
  std::string path;
  std::shared_ptr<const engine::GameSpec> spec;
  std::vector<Dependency> deps;
};

// Every *.game file in the directory, sorted by file name, with its
// dependencies from deps_dir/<stem>.deps when that file exists.
std::vector<SuiteGame> load_suite(const std::string& games_dir, const std::string& deps_dir);

enum class AgentKind { kNail, kRandom };

struct EvalOptions {
  AgentKind agent = AgentKind::kNail;
  agent::AgentConfig config;
  std::vector<std::uint64_t> seeds = {1, 2, 3};
};

struct EpisodeSummary {
  std::uint64_t seed = 0;
  int score = 0;
  int steps = 0;
  bool finished = false;
  std::vector<bool> deps;
};

struct GameReport {
  std::string game_id;
  int max_score = 0;
  std::vector<EpisodeSummary> episodes;
  std::vector<Dependency> dependencies;

  double mean_normalized() const;
  // Some seed scored.
  bool nonzero() const;
  int deps_satisfied() const;
  int deps_total() const;
  int deps_satisfied(DepKind kind) const;
  int deps_total(DepKind kind) const;
};

struct SuiteReport {
  std::string agent;
  std::vector<std::uint64_t> seeds;
  int step_budget = 0;
  std::vector<std::string> modules;
  std::vector<GameReport> games;

  double mean_normalized() const;
  double pct_nonzero() const;
  // Dependencies satisfied over all games and seeds.
  double pct_deps() const;
  double pct_deps(DepKind kind) const;

  std::string to_json() const;
  std::string to_text() const;
};

// Runs every game with every seed.
SuiteReport evaluate_suite(const std::vector<SuiteGame>& games, const agent::Resources& res,
                           const EvalOptions& options);

// One episode with dependency tracking; the result keeps its transcript and KG.
agent::EpisodeResult run_tracked(const SuiteGame& game, std::uint64_t seed, const agent::Resources& res,
                                 const EvalOptions& options, EpisodeSummary& summary);

struct AblationStep {
  std::string label;
  std::vector<std::string> modules;
};

// look-only, +Navigator, +Hoarder, +Examiner, +Interactor, +Idler, +Specialized.
const std::vector<AblationStep>& ablation_steps();

struct AblationRow {
  AblationStep step;
  double mean_normalized = 0.0;
  double pct_nonzero = 0.0;
};

std::vector<AblationRow> ablate(const std::vector<SuiteGame>& games, const agent::Resources& res,
                                const std::vector<std::uint64_t>& seeds,
                                int step_budget = agent::kDefaultStepBudget);
std::string ablation_table(const std::vector<AblationRow>& rows);

// ---------------------------------------------------------------- offline checks

struct ReplayReport {
  int grants = 0;
  int steps = 0;
  int budget = 0;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
};

// Re-derives every grant from its eagerness annotation: the granted module
// must hold the maximum, ties to the earliest registered, only that module
// may act until the next grant, and the step count stays within budget.
ReplayReport validate_transcript(std::string_view transcript);

struct MapEdge {
  std::string from;
  Direction direction = Direction::kNorth;
  std::string to;

  auto operator<=>(const MapEdge&) const = default;
};

struct MappingReport {
  std::vector<MapEdge> truth;      // room transitions caused by direction actions
  std::vector<MapEdge> recovered;  // KG connections in ground-truth room ids
  int locations = 0;
  int duplicate_locations = 0;  // KG locations beyond one per room
  int ambiguous_locations = 0;  // KG locations seen as more than one room
  int unmatched_locations = 0;  // KG locations never tied to a room
  int steps = 0;

  bool exact() const {
    return truth == recovered && duplicate_locations == 0 && ambiguous_locations == 0 && unmatched_locations == 0;
  }
};

MappingReport check_mapping(std::shared_ptr<const engine::GameSpec> spec, std::uint64_t seed,
                            const agent::Resources& res, const agent::AgentConfig& config = {});

}  // namespace nail::harness

#endif  // NAIL_HARNESS_HPP_
