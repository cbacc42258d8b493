#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "nail/agent/loop.hpp"
#include "nail/engine.hpp"
#include "nail/rng.hpp"
#include "support.hpp"

using namespace nail;
using nail::testing::data_path;
using nail::testing::game;

namespace {

// Sums score events straight from the game document.
int hand_sum(const std::string& path) {
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  int total = 0;
  for (const auto& r : doc["rooms"]) total += r.value("score_on_first_visit", 0);
  for (const auto& o : doc["objects"]) {
    total += o.value("take_score", 0);
    for (const auto& v : o.value("verb_responses", nlohmann::json::array())) total += v.value("score", 0);
  }
  for (const auto& p : doc.value("prompts", nlohmann::json::array())) {
    for (const char* side : {"yes", "no"}) {
      if (p.contains(side)) total += p[side].value("score", 0);
    }
  }
  return total;
}

std::string strip(std::string text, const std::vector<engine::FlavorText>& flavors) {
  for (const auto& f : flavors) {
    for (auto pos = text.find(f.text); pos != std::string::npos; pos = text.find(f.text)) text.erase(pos, f.text.size());
  }
  return text::trim(text);
}

const char* kTinyGame = R"({
  "meta": {"game_id": "tiny", "start_room": "a", "max_score": 0},
  "rooms": [{"id": "a", "name": "A", "description": "Room A.", "exits": {"north": "%s"}}],
  "objects": []
})";

std::string tiny(const std::string& exit_to) {
  char buf[512];
  std::snprintf(buf, sizeof buf, kTinyGame, exit_to.c_str());
  return buf;
}

}  // namespace

TEST(LoadGame, MinizorkShape) {
  const auto spec = game("minizork");
  EXPECT_EQ(spec->rooms.size(), 8u);
  EXPECT_EQ(spec->max_score, 45);
  EXPECT_EQ(hand_sum(data_path("games/minizork.game")), 45);
}

TEST(LoadGame, EveryBundledGameScoresAddUp) {
  for (const char* id : {"minizork", "bedroom", "vault", "balances", "compass"}) {
    const auto spec = game(id);
    EXPECT_EQ(hand_sum(data_path(std::string("games/") + id + ".game")), spec->max_score) << id;
  }
}

TEST(LoadGame, Errors) {
  EXPECT_NO_THROW(engine::load_game(tiny("a")));
  EXPECT_THROW(engine::load_game(tiny("nowhere_room")), engine::ValidationError);
  EXPECT_THROW(engine::load_game(""), engine::ParseError);
  try {
    engine::load_game("{\n\"meta\": ,\n}");
    FAIL();
  } catch (const engine::ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Reset, StartsInWestOfHouse) {
  auto [state, obs] = engine::reset(game("minizork"), 7);
  EXPECT_EQ(obs.text.rfind("West of House", 0), 0u);
  EXPECT_EQ(state.player_room, "west_of_house");
  EXPECT_EQ(state.score, 0);
  EXPECT_EQ(state.moves, 0);
  EXPECT_TRUE(engine::introspect(state).inventory.empty());
}

TEST(Reset, Deterministic) {
  const auto spec = game("minizork");
  EXPECT_EQ(engine::reset(spec, 7).second, engine::reset(spec, 7).second);
}

TEST(Reset, FlavorOnlyAppends) {
  const auto spec = game("minizork");
  const auto& flavors = spec->flavor_texts.at("west_of_house");
  const auto base = spec->rooms.front();
  std::set<std::string> seen;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto obs = engine::reset(spec, seed).second;
    seen.insert(obs.text);
    EXPECT_EQ(strip(obs.text, flavors), base.name + "\n" + base.description) << seed;
  }
  // Some seeds show the optional sentence and some do not.
  EXPECT_EQ(seen.size(), 2u);
}

TEST(Step, Examples) {
  auto [state, obs] = engine::reset(game("minizork"), 7);
  EXPECT_EQ(engine::step(state, "open mailbox").text, "Opening the small mailbox reveals a leaflet.");
  EXPECT_EQ(engine::step(state, "xyzzy").text, "I don't know the word xyzzy.");
  engine::step(state, "take leaflet");
  EXPECT_EQ(engine::introspect(state).inventory, std::vector<std::string>{"leaflet"});
  engine::step(state, "north");
  EXPECT_EQ(state.player_room, "north_of_house");
  engine::step(state, "east");
  engine::step(state, "south");
  EXPECT_EQ(state.player_room, "south_of_house");
  EXPECT_EQ(engine::step(state, "south").text, "You can't go that way.");
  EXPECT_EQ(state.player_room, "south_of_house");
}

TEST(Step, ItemizedTakeAll) {
  auto [state, obs] = engine::reset(game("bedroom"), 1);
  engine::step(state, "turn on light");
  const auto r = engine::step(state, "take all");
  std::vector<std::string> lines;
  std::istringstream in(r.text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "telephone: You lunge for it, but the room spins nauseatingly away.");
  EXPECT_EQ(lines[3].rfind("your gown: Luckily", 0), 0u);
  EXPECT_EQ(engine::introspect(state).inventory, std::vector<std::string>{"gown"});
}

TEST(Step, TakeAllUnsupported) {
  auto [state, obs] = engine::reset(game("vault"), 1);
  EXPECT_EQ(engine::step(state, "take all").text, "You can't see any such thing.");
}

TEST(Step, RandomPlayInvariants) {
  // Score stays within [0, max], moves count every step, identical runs agree.
  const auto& actions = agent::random_agent_actions();
  for (const char* id : {"minizork", "bedroom", "vault", "balances", "compass"}) {
    const auto spec = game(id);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto [a, oa] = engine::reset(spec, seed);
      auto [b, ob] = engine::reset(spec, seed);
      std::mt19937_64 g(seed);
      for (int i = 0; i < 300; ++i) {
        const auto& act = actions[rng::below(g, actions.size())];
        const auto ra = engine::step(a, act);
        const auto rb = engine::step(b, act);
        ASSERT_EQ(ra, rb);
        ASSERT_GE(a.score, 0);
        ASSERT_LE(a.score, spec->max_score);
        if (a.finished) break;
      }
      EXPECT_EQ(engine::introspect(a), engine::introspect(b));
    }
  }
}
