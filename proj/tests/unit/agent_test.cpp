#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "nail/agent/loop.hpp"
#include "nail/agent/modules.hpp"
#include "nail/harness.hpp"
#include "support.hpp"

using namespace nail;
using namespace nail::agent;
using nail::testing::game;
using nail::testing::resources;

namespace {

AgentContext make_context(const std::string& description = "Room\nA plain room.") {
  AgentContext ctx;
  ctx.res = resources();
  ctx.rng.seed(1);
  ctx.kg.set_current(ctx.add_location_from(description));
  return ctx;
}

// Runs one grant against canned responses, keeping the records the loop
// would keep.
std::vector<std::string> drive(DecisionModule& m, AgentContext& ctx, const std::map<std::string, std::string>& script,
                               const std::string& otherwise = "Nothing happens.") {
  std::vector<std::string> actions;
  ActionIterator it = m.take_control(ctx);
  while (auto a = it.next()) {
    actions.push_back(*a);
    const auto found = script.find(*a);
    const std::string response = found == script.end() ? otherwise : found->second;
    const double p = validity::p_valid(*ctx.res.validity, response);
    ctx.kg.record_action(ctx.current(), *a, response, p);
    ctx.last_observation = {response, 0, 0};
    ctx.last_p_valid = p;
    it.send(Feedback{{response, 0, 0}, p});
    if (actions.size() > 100) break;
  }
  return actions;
}

std::vector<std::string> entity_names(const kg::KnowledgeGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.entities()) out.push_back(e.name());
  return out;
}

std::shared_ptr<const engine::GameSpec> sky_game() {
  return std::make_shared<const engine::GameSpec>(engine::load_game(R"({
    "meta": {"game_id": "sky", "start_room": "field", "max_score": 0},
    "rooms": [{"id": "field", "name": "Field",
               "description": "You stand under the open sky. There is a small mailbox here."}],
    "objects": [{"id": "mailbox", "names": ["small mailbox", "mailbox"], "location": "field", "listed": false,
                 "examine_text": "The mailbox is dented, and its red flag is raised."}]
  })"));
}

const char* kHitchhiker =
    "telephone: You lunge for it, but the room spins nauseatingly away.\n"
    "flathead screwdriver: It slips through your fumbling fingers and hits the carpet with a nerve-shattering bang.\n"
    "toothbrush: You lunge for it, but the room spins nauseatingly away.\n"
    "your gown: Luckily, this is large enough for you to get hold of. You notice something in the pocket.";

}  // namespace

TEST(Examiner, ExaminesNarrativeAndAttachesEntity) {
  Examiner ex(0.9);
  auto ctx = make_context();
  ctx.take_narrative(ctx.current());
  EXPECT_EQ(ex.eagerness(ctx), 0.0);
  ctx.add_narrative(ctx.current(), "There is a small mailbox here.");
  EXPECT_DOUBLE_EQ(ex.eagerness(ctx), 0.9);
  const auto actions = drive(ex, ctx, {{"examine small mailbox", "The mailbox is dented, and its red flag is raised."}});
  ASSERT_FALSE(actions.empty());
  EXPECT_EQ(actions.front(), "examine small mailbox");
  EXPECT_EQ(entity_names(ctx.kg), std::vector<std::string>{"small mailbox"});
  EXPECT_EQ(ctx.kg.entity(0).place, ctx.current());
}

TEST(Examiner, NoPhrasesEndsImmediately) {
  Examiner ex(0.9);
  auto ctx = make_context();
  ctx.take_narrative(ctx.current());
  ctx.add_narrative(ctx.current(), "Nothing.");
  EXPECT_TRUE(drive(ex, ctx, {}).empty());
}

TEST(Examiner, UnknownWordIsNotedAndNeverAnEntity) {
  AgentConfig config;
  config.modules = {"Examiner", "LookOnly"};
  config.step_budget = 12;
  const auto r = run_episode(sky_game(), 1, resources(), config);
  EXPECT_TRUE(r.kg.unrecognized_words().count("sky"));
  const auto names = entity_names(r.kg);
  EXPECT_NE(std::find(names.begin(), names.end(), "small mailbox"), names.end());
  for (const auto& n : names) EXPECT_EQ(n.find("sky"), std::string::npos) << n;
  EXPECT_NE(r.transcript.find("I don't know the word sky."), std::string::npos);
}

TEST(Hoarder, HitchhikerTakeAll) {
  auto ctx = make_context();
  const auto items = parse_take_all(kHitchhiker);
  ASSERT_EQ(items.size(), 4u);
  EXPECT_EQ(items[1].name, "flathead screwdriver");
  Hoarder::absorb(ctx, kHitchhiker);
  EXPECT_EQ(ctx.kg.entities().size(), 4u);
  ASSERT_EQ(ctx.kg.inventory().size(), 1u);
  EXPECT_EQ(ctx.kg.entity(ctx.kg.inventory().front()).name(), "your gown");
}

TEST(Hoarder, UnsupportedTakeAllChangesNothing) {
  Hoarder h(0.95);
  auto ctx = make_context();
  EXPECT_DOUBLE_EQ(h.eagerness(ctx), 0.95);
  drive(h, ctx, {{"take all", "You can't see any such thing."}});
  EXPECT_TRUE(ctx.kg.entities().empty());
  EXPECT_TRUE(ctx.kg.inventory().empty());
  EXPECT_EQ(h.eagerness(ctx), 0.0);
}

TEST(Hoarder, SingleTakenUsesInventory) {
  Hoarder h(0.95);
  auto ctx = make_context();
  const auto actions =
      drive(h, ctx, {{"take all", "Taken."}, {"inventory", "You are carrying:\n  a brass lamp"}});
  EXPECT_EQ(actions, (std::vector<std::string>{"take all", "inventory"}));
  ASSERT_EQ(ctx.kg.inventory().size(), 1u);
  EXPECT_EQ(ctx.kg.entity(ctx.kg.inventory().front()).name(), "brass lamp");
}

TEST(Hoarder, ParsersRejectPlainText) {
  EXPECT_TRUE(parse_take_all("Taken.").empty());
  EXPECT_TRUE(parse_take_all("lamp: Taken.\nSome prose without a colon").empty());
  EXPECT_EQ(parse_inventory("You are carrying:\n  a brass lamp\n  the leaflet"),
            (std::vector<std::string>{"brass lamp", "leaflet"}));
}

TEST(Interactor, LanguageModelOrdersCandidates) {
  auto ctx = make_context();
  ctx.kg.add_entity(ctx.current(), "door", "");
  ctx.kg.add_entity(ctx.current(), "torch", "");
  const auto c = Interactor::candidates(ctx);
  auto pos = [&](const std::string& a) { return std::find(c.begin(), c.end(), a) - c.begin(); };
  ASSERT_LT(pos("open door"), static_cast<long>(c.size()));
  EXPECT_LT(pos("open door"), pos("light door"));
}

TEST(Interactor, TemplatesOverEntityPairs) {
  auto ctx = make_context();
  ctx.kg.add_entity(ctx.current(), "chest", "");
  ctx.kg.add_entity(kg::kInventory, "key", "");
  const auto c = Interactor::candidates(ctx);
  EXPECT_NE(std::find(c.begin(), c.end(), "unlock chest with key"), c.end());
  EXPECT_EQ(pair_templates().size(), 10u);
  // 561 verbs times 2 names, plus 10 templates times 2 ordered pairs.
  EXPECT_EQ(c.size(), 561u * 2 + 10u * 2);
}

TEST(Interactor, EagernessDecaysAndReachesZero) {
  Interactor in(0.85);
  auto ctx = make_context();
  EXPECT_EQ(in.eagerness(ctx), 0.0);
  ctx.kg.add_entity(ctx.current(), "door", "");
  EXPECT_DOUBLE_EQ(in.eagerness(ctx), 0.85);
  const auto first = drive(in, ctx, {});
  ASSERT_EQ(first.size(), 1u);
  EXPECT_DOUBLE_EQ(in.eagerness(ctx), 0.85 / 2);
  for (const auto& a : Interactor::candidates(ctx)) ctx.kg.record_action(ctx.current(), a, "Nothing happens.", 0.0);
  EXPECT_EQ(in.eagerness(ctx), 0.0);
}

TEST(Interactor, SkipsBlockedWords) {
  Interactor in(0.85);
  auto ctx = make_context();
  ctx.kg.add_entity(ctx.current(), "door", "");
  ctx.kg.note_unrecognized("door");
  EXPECT_EQ(in.eagerness(ctx), 0.0);
}

TEST(Navigator, PrefersMentionedDirection) {
  auto ctx = make_context("Hall\nThere is an open door to the west.");
  EXPECT_EQ(Navigator::choose_direction(ctx), Direction::kWest);
}

TEST(Navigator, FailedMoveRecordsNoEdge) {
  Navigator nav(0.1);
  auto ctx = make_context("Hall\nThere is an open door to the west.");
  const auto actions = drive(nav, ctx, {{"west", "You can't go that way."}});
  EXPECT_EQ(actions, std::vector<std::string>{"west"});
  EXPECT_TRUE(ctx.kg.connections().empty());
  EXPECT_EQ(ctx.kg.location(0).navigation_for(Direction::kWest).status, kg::NavStatus::kFailed);
  EXPECT_NE(Navigator::choose_direction(ctx), Direction::kWest);
}

TEST(Navigator, RevisitReusesLocation) {
  Navigator nav(0.1);
  const std::string hall =
      "Hall\nA long panelled hall runs under a vaulted ceiling hung with faded banners and old portraits of "
      "stern ancestors. There is an open door to the west, and a staircase climbs to a landing.";
  const std::string study =
      "Study\nA cosy study lined with shelves of leather books, with a writing desk by the window. A door "
      "leads east.";
  auto ctx = make_context(hall);
  const std::string blocked = "You can't go that way.";
  EXPECT_EQ(drive(nav, ctx, {{"west", study}, {"look", study}}, blocked), (std::vector<std::string>{"west", "look"}));
  ASSERT_EQ(ctx.kg.locations().size(), 2u);
  EXPECT_EQ(ctx.current(), 1);
  // Back east with a flavor sentence appended: same location, new edge.
  EXPECT_EQ(drive(nav, ctx, {{"east", hall + " A clock ticks."}}, blocked), std::vector<std::string>{"east"});
  EXPECT_EQ(ctx.kg.locations().size(), 2u);
  EXPECT_EQ(ctx.current(), 0);
  EXPECT_TRUE(ctx.kg.connections().count({0, Direction::kWest, 1}));
  EXPECT_TRUE(ctx.kg.connections().count({1, Direction::kEast, 0}));
}

TEST(Navigator, LooksWhenResponseIsNotADescription) {
  Navigator nav(0.1);
  auto ctx = make_context("Hall\nA long hall. An arch opens north.");
  const auto actions =
      drive(nav, ctx, {{"north", "You squeeze through the arch."}, {"look", "Garden\nRoses everywhere, and a pond."}});
  EXPECT_EQ(actions, (std::vector<std::string>{"north", "look"}));
  EXPECT_EQ(ctx.kg.locations().size(), 2u);
  EXPECT_TRUE(ctx.kg.connections().count({0, Direction::kNorth, 1}));
}

TEST(Darkness, LightsInventoriedLamp) {
  Darkness dark(0.99);
  auto ctx = make_context();
  ctx.kg.add_entity(kg::kInventory, "lamp", "");
  ctx.last_observation = {"It is pitch black.", 0, 0};
  ctx.in_dark = true;
  ctx.dark_spell = 1;
  EXPECT_DOUBLE_EQ(dark.eagerness(ctx), 0.99);
  EXPECT_EQ(Darkness::light_action(ctx), "turn on lamp");
}

TEST(YouHaveTo, ExtractsHint) {
  EXPECT_EQ(YouHaveTo::hint("You'll have to get out of bed first."), "get out of bed");
  EXPECT_EQ(YouHaveTo::hint("You will have to open the door first."), "open the door");
  EXPECT_FALSE(YouHaveTo::hint("Taken."));
}

TEST(YesNo, PromptDetection) {
  EXPECT_TRUE(YesNo::is_yes_no_prompt("Do you want to climb down the rope?"));
  EXPECT_TRUE(YesNo::is_yes_no_prompt("Please answer yes or no."));
  EXPECT_FALSE(YesNo::is_yes_no_prompt("What do you want to unlock the door with?"));
  EXPECT_FALSE(YesNo::is_yes_no_prompt(std::string(engine::kRestartPrompt)));
  EXPECT_TRUE(is_restart_prompt(std::string("You have died.\n\n") + std::string(engine::kRestartPrompt)));
}

TEST(Registry, NamesAndErrors) {
  EXPECT_EQ(all_module_names().size(), 10u);
  EXPECT_EQ(default_module_names().size(), 9u);
  for (const auto& n : all_module_names()) EXPECT_EQ(make_module(n, {})->name(), n);
  EXPECT_THROW(make_module("Wizard", {}), UnknownModuleError);
}

TEST(Config, FromJson) {
  const auto c = AgentConfig::from_json(R"({"modules": ["Navigator", "LookOnly"], "eagerness": {"navigator": 0.2},
                                            "step_budget": 50})");
  EXPECT_EQ(c.modules, (std::vector<std::string>{"Navigator", "LookOnly"}));
  EXPECT_DOUBLE_EQ(c.eagerness.navigator, 0.2);
  EXPECT_EQ(c.step_budget, 50);
  EXPECT_THROW(AgentConfig::from_json(R"({"modules": ["Wizard"]})"), std::invalid_argument);
  EXPECT_THROW(AgentConfig::from_json(R"({"eagerness": {"navigator": 1.0}})"), std::invalid_argument);
  EXPECT_THROW(AgentConfig::from_json(R"({"colour": 1})"), std::invalid_argument);
}

TEST(Loop, MinizorkScoresAndIsDeterministic) {
  const auto spec = game("minizork");
  const auto a = run_episode(spec, 7, resources());
  const auto b = run_episode(spec, 7, resources());
  EXPECT_GT(a.score, 0);
  EXPECT_LE(a.steps, 1000);
  EXPECT_EQ(a.transcript, b.transcript);
  EXPECT_EQ(a.kg, b.kg);
}

TEST(Loop, LookOnlyScoresOnlyTheLitStartRoom) {
  AgentConfig config;
  config.modules = {"LookOnly"};
  config.step_budget = 20;
  for (const char* id : {"minizork", "bedroom", "vault", "balances", "compass"}) {
    const auto spec = game(id);
    const auto* start = spec->find_room(spec->start_room);
    const int expected = start->is_dark ? 0 : start->score_on_first_visit;
    const auto r = run_episode(spec, 1, resources(), config);
    EXPECT_EQ(r.score, expected) << id;
    EXPECT_EQ(r.steps, 20) << id;
  }
}

TEST(Loop, IdlerActsWhenNothingElseWants) {
  // The Navigator never drops below its constant eagerness, so it is left out.
  AgentConfig config;
  config.modules = {"Hoarder", "Examiner", "Interactor", "Idler"};
  config.step_budget = 200;
  const auto r = run_episode(sky_game(), 3, resources(), config);
  EXPECT_NE(r.transcript.find("module=Idler"), std::string::npos);
}

TEST(Loop, TranscriptsReplayCleanly) {
  // Property over games and seeds: arbitration, sequencing and budget hold.
  for (const char* id : {"minizork", "vault", "balances"}) {
    for (std::uint64_t seed : {1u, 2u}) {
      AgentConfig config;
      config.step_budget = 300;
      const auto r = run_episode(game(id), seed, resources(), config);
      const auto report = harness::validate_transcript(r.transcript);
      EXPECT_TRUE(report.errors.empty()) << id << " " << seed << ": " << report.errors.front();
      EXPECT_EQ(report.steps, r.steps);
      EXPECT_LE(r.steps, 300);
      EXPECT_EQ(r.blocked_emissions, 0);
    }
  }
}

TEST(Loop, RandomAgentUsesOnlyItsActions) {
  const auto r = run_random_episode(game("minizork"), 4, 200);
  EXPECT_EQ(r.steps, 200);
  std::istringstream in(r.transcript);
  const auto& allowed = random_agent_actions();
  EXPECT_EQ(allowed.size(), 11u);
  for (std::string line; std::getline(in, line);) {
    const auto q = line.find("action=\"");
    if (line.rfind("step=", 0) != 0 || q == std::string::npos) continue;
    const auto action = line.substr(q + 8, line.find('"', q + 8) - q - 8);
    EXPECT_NE(std::find(allowed.begin(), allowed.end(), action), allowed.end()) << action;
  }
}
