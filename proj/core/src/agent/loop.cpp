#include "nail/agent/loop.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "nail/rng.hpp"

namespace nail::agent {

namespace {

constexpr std::uint64_t kAgentSeedSalt = 0x9e3779b97f4a7c15ULL;

std::string fmt_double(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string quote_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void append_response(std::string& transcript, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) transcript += "  | " + line + "\n";
}

void note_unrecognized(AgentContext& ctx, const std::string& action, const std::string& response) {
  static const std::regex kUnknown(R"re(I don(?:'|\xE2\x80\x99)t know the word "?([^" .]+)"?)re");
  std::smatch m;
  if (std::regex_search(response, m, kUnknown)) {
    ctx.kg.note_unrecognized(m[1].str());
    return;
  }
  if (text::contains_ci(response, "not a verb I recognise")) {
    // Blame the first word unless it has opened a valid action before; a
    // known verb with an unknown particle ("look behind") is not its fault.
    const auto toks = text::tokenize(action);
    if (toks.empty()) return;
    for (const auto& loc : ctx.kg.locations()) {
      for (const auto& r : loc.action_records) {
        if (!validity::is_valid(r.p_valid)) continue;
        const auto first = text::tokenize(r.action);
        if (!first.empty() && first.front() == toks.front()) return;
      }
    }
    ctx.kg.note_unrecognized(toks.front());
  }
}

bool is_movement_or_meta(const std::string& action) {
  const auto toks = text::tokenize(action);
  if (toks.empty()) return true;
  if (toks.size() == 1) {
    const auto& w = toks[0];
    if (parse_direction(w) || w == "look" || w == "l" || w == "inventory" || w == "i" || w == "yes" ||
        w == "no" || w == "restart") {
      return true;
    }
  }
  return std::find(toks.begin(), toks.end(), "all") != toks.end();
}

struct Episode {
  std::shared_ptr<const engine::GameSpec> spec;
  engine::GameState state;
  AgentContext ctx;
  std::string transcript;
  int blocked = 0;
};

// Runs one action through the engine and every bookkeeping step.
Feedback perform(Episode& ep, const std::string& module, const std::string& action, bool narrative,
                 int grant, const Observer& observer) {
  AgentContext& ctx = ep.ctx;
  engine::Observation obs = engine::step(ep.state, action);
  ++ctx.step_count;
  const double p = validity::p_valid(*ctx.res.validity, obs.text);
  const int here = ctx.current();
  ctx.kg.record_action(here, action, obs.text, p);
  note_unrecognized(ctx, action, obs.text);
  if (text::tokenize(action) != std::vector<std::string>{"take", "all"}) {
    ctx.kg.apply_action_effects(action, obs.text, p);
  }
  if (narrative && validity::is_valid(p) && !is_movement_or_meta(action) && !is_dark_text(obs.text)) {
    ctx.add_narrative(here, obs.text);
  }
  const bool dark = is_dark_text(obs.text);
  if (dark && !ctx.in_dark) ++ctx.dark_spell;
  ctx.in_dark = dark;
  ctx.last_observation = obs;
  ctx.last_p_valid = p;
  ctx.last_action = action;
  ctx.grant_observations.push_back(obs);

  ep.transcript += "step=" + std::to_string(ctx.step_count) + " module=" + module + " action=" + quote_field(action) +
                   " p=" + fmt_double("%.4f", p) + " delta=" + std::to_string(obs.score_delta) +
                   " score=" + std::to_string(ep.state.score) + "\n";
  append_response(ep.transcript, obs.text);
  if (observer) observer(ctx, ep.state, StepEvent{ctx.step_count, module, action, obs, p, grant});
  return Feedback{std::move(obs), p};
}

Episode start(std::shared_ptr<const engine::GameSpec> spec, std::uint64_t seed, const Resources& res,
              int budget) {
  Episode ep;
  ep.spec = spec;
  auto [state, obs] = engine::reset(spec, seed);
  ep.state = std::move(state);
  ep.ctx.res = res;
  ep.ctx.rng.seed(seed ^ kAgentSeedSalt);
  ep.ctx.step_budget = budget;
  ep.ctx.last_observation = obs;
  ep.ctx.add_location_from(obs.text);
  ep.ctx.in_dark = is_dark_text(obs.text);
  if (ep.ctx.in_dark) ep.ctx.dark_spell = 1;
  ep.transcript = "# game=" + spec->game_id + " seed=" + std::to_string(seed) +
                  " budget=" + std::to_string(budget) + "\n";
  append_response(ep.transcript, obs.text);
  return ep;
}

EpisodeResult finish(Episode& ep, std::uint64_t seed, int grants) {
  EpisodeResult r;
  r.game_id = ep.spec->game_id;
  r.seed = seed;
  r.score = ep.state.score;
  r.max_score = ep.spec->max_score;
  r.steps = ep.ctx.step_count;
  r.finished = ep.state.finished;
  r.grants = grants;
  r.blocked_emissions = ep.blocked;
  ep.transcript += "# end score=" + std::to_string(r.score) + "/" + std::to_string(r.max_score) +
                   " steps=" + std::to_string(r.steps) + "\n";
  r.transcript = std::move(ep.transcript);
  r.kg = std::move(ep.ctx.kg);
  return r;
}

}  // namespace

AgentConfig AgentConfig::from_json(std::string_view document) {
  using nlohmann::json;
  AgentConfig c;
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("run configuration: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("run configuration must be a JSON object");
  for (const auto& [k, v] : doc.items()) {
    if (k != "modules" && k != "eagerness" && k != "step_budget") {
      throw std::invalid_argument("unknown run configuration key: " + k);
    }
  }
  if (doc.contains("modules")) {
    c.modules = doc.at("modules").get<std::vector<std::string>>();
    for (const auto& m : c.modules) make_module(m, c.eagerness);  // validates names
  }
  if (doc.contains("step_budget")) c.step_budget = doc.at("step_budget").get<int>();
  if (doc.contains("eagerness")) {
    for (const auto& [k, v] : doc.at("eagerness").items()) {
      const double x = v.get<double>();
      if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("eagerness " + k + " outside [0,1)");
      EagernessTable& t = c.eagerness;
      if (k == "restart") t.restart = x;
      else if (k == "yes_no") t.yes_no = x;
      else if (k == "darkness") t.darkness = x;
      else if (k == "you_have_to") t.you_have_to = x;
      else if (k == "hoarder") t.hoarder = x;
      else if (k == "examiner") t.examiner = x;
      else if (k == "interactor") t.interactor = x;
      else if (k == "navigator") t.navigator = x;
      else if (k == "idler") t.idler = x;
      else if (k == "look_only") t.look_only = x;
      else throw std::invalid_argument("unknown eagerness key: " + k);
    }
  }
  return c;
}

AgentConfig AgentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open run configuration: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

EpisodeResult run_episode(std::shared_ptr<const engine::GameSpec> spec, std::uint64_t seed, const Resources& res,
                          const AgentConfig& config, const Observer& observer) {
  if (!res.validity || !res.lm || !res.verbs || !res.lexicon) {
    throw std::invalid_argument("run_episode: agent resources are incomplete");
  }
  std::vector<std::unique_ptr<DecisionModule>> modules;
  for (const auto& name : config.modules) {
    modules.push_back(make_module(name, config.eagerness));
    modules.back()->set_registration_index(static_cast<int>(modules.size()) - 1);
  }
  if (modules.empty()) throw std::invalid_argument("run_episode: no decision modules");

  Episode ep = start(spec, seed, res, config.step_budget);
  AgentContext& ctx = ep.ctx;
  int grants = 0;
  // A module that takes control and emits nothing sits out until the next
  // engine step, so the next most eager module gets its turn.
  std::vector<bool> idle(modules.size(), false);

  while (ctx.budget_left() > 0 && !ep.state.finished) {
    std::vector<double> eager(modules.size(), 0.0);
    std::size_t winner = 0;
    for (std::size_t i = 0; i < modules.size(); ++i) {
      eager[i] = idle[i] ? 0.0 : modules[i]->eagerness(ctx);
      if (eager[i] > eager[winner]) winner = i;
    }
    if (eager[winner] <= 0.0) {
      if (std::all_of(idle.begin(), idle.end(), [](bool b) { return !b; })) break;
      std::fill(idle.begin(), idle.end(), false);
      continue;
    }
    DecisionModule& m = *modules[winner];
    ++grants;
    ep.transcript += "@grant step=" + std::to_string(ctx.step_count) + " module=" + m.name() + " eager=";
    for (std::size_t i = 0; i < modules.size(); ++i) {
      ep.transcript += (i ? "," : "") + modules[i]->name() + ":" + fmt_double("%.17g", eager[i]);
    }
    ep.transcript += "\n";

    ctx.grant_observations.clear();
    ActionIterator it = m.take_control(ctx);
    int emitted = 0;
    // The module is always resumed after its last action so that it can
    // finish updating the knowledge graph.
    for (;;) {
      std::optional<std::string> action = it.next();
      if (!action) break;
      if (emitted == m.max_actions_per_grant()) {
        throw std::logic_error(m.name() + " exceeded its bound of " + std::to_string(emitted) + " actions per grant");
      }
      if (ctx.budget_left() <= 0 || ep.state.finished) break;
      ++emitted;
      if (text::trim(*action).empty() || ctx.kg.is_blocked(*action)) {
        ++ep.blocked;
        ep.transcript += "blocked module=" + m.name() + " action=" + quote_field(*action) + "\n";
        it.send(Feedback{engine::Observation{"", 0, ep.state.moves}, 0.0});
        continue;
      }
      it.send(perform(ep, m.name(), *action, m.feeds_narrative(), grants, observer));
    }
    if (emitted == 0) {
      idle[winner] = true;
    } else {
      std::fill(idle.begin(), idle.end(), false);
    }
  }
  return finish(ep, seed, grants);
}

const std::vector<std::string>& random_agent_actions() {
  static const std::vector<std::string> actions = {"north", "south", "east",     "west",     "up",  "down",
                                                   "look",  "inventory", "take all", "drop", "yes"};
  return actions;
}

EpisodeResult run_random_episode(std::shared_ptr<const engine::GameSpec> spec, std::uint64_t seed, int step_budget,
                                 const Observer& observer) {
  auto [state, obs] = engine::reset(spec, seed);
  Episode ep;
  ep.spec = spec;
  ep.state = std::move(state);
  ep.ctx.rng.seed(seed ^ kAgentSeedSalt);
  ep.ctx.step_budget = step_budget;
  ep.ctx.last_observation = obs;
  ep.ctx.kg.add_location(first_line(obs.text), obs.text);
  ep.transcript = "# game=" + spec->game_id + " seed=" + std::to_string(seed) +
                  " budget=" + std::to_string(step_budget) + " agent=random\n";
  const auto& actions = random_agent_actions();
  while (ep.ctx.budget_left() > 0 && !ep.state.finished) {
    const std::string& a = actions[rng::below(ep.ctx.rng, actions.size())];
    engine::Observation o = engine::step(ep.state, a);
    ++ep.ctx.step_count;
    ep.transcript += "step=" + std::to_string(ep.ctx.step_count) + " module=Random action=" + quote_field(a) +
                     " delta=" + std::to_string(o.score_delta) + " score=" + std::to_string(ep.state.score) + "\n";
    append_response(ep.transcript, o.text);
    if (observer) observer(ep.ctx, ep.state, StepEvent{ep.ctx.step_count, "Random", a, o, 0.0, ep.ctx.step_count});
  }
  return finish(ep, seed, 0);
}

}  // namespace nail::agent
