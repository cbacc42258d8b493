#include "nail/agent/modules.hpp"

#include <algorithm>
#include <regex>

#include "nail/rng.hpp"

namespace nail::agent {

namespace {

std::string strip_article(std::string s) {
  s = text::trim(s);
  for (std::string_view a : {"a ", "an ", "the ", "some "}) {
    if (s.size() > a.size() && text::to_lower(s.substr(0, a.size())) == a) return s.substr(a.size());
  }
  return s;
}

std::vector<std::string> lines_of(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto nl = s.find('\n', start);
    const auto end = nl == std::string_view::npos ? s.size() : nl;
    out.emplace_back(s.substr(start, end - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

std::string unknown_word(std::string_view response) {
  static const std::regex re(R"re(I don(?:'|\xE2\x80\x99)t know the word "?([^" .]+)"?)re");
  std::cmatch m;
  if (std::regex_search(response.begin(), response.end(), m, re)) return text::to_lower(m[1].str());
  return {};
}

// Known under this name here or in the inventory.
bool known_entity(const AgentContext& ctx, const std::string& phrase) {
  return ctx.kg.find_entity(ctx.current(), phrase) || ctx.kg.find_entity(kg::kInventory, phrase);
}

}  // namespace

// ---------------------------------------------------------------- Examiner

double Examiner::eagerness(const AgentContext& ctx) const {
  return ctx.has_narrative() ? eagerness_ : 0.0;
}

ActionIterator Examiner::take_control(AgentContext& ctx) {
  const int loc = ctx.current();
  std::vector<std::string> phrases;
  for (const auto& t : ctx.take_narrative(loc)) {
    if (is_dark_text(t) || is_restart_prompt(t)) continue;
    for (const auto& np : text::extract_noun_phrases(t, *ctx.res.lexicon)) {
      if (std::find(phrases.begin(), phrases.end(), np.text) == phrases.end()) phrases.push_back(np.text);
    }
  }
  for (const auto& np : phrases) {
    auto words = text::tokenize(np);
    // A rejected word is dropped and the rest of the phrase tried once more.
    for (int attempt = 0; attempt < 2 && !words.empty(); ++attempt) {
      const std::string phrase = text::join(words);
      if (known_entity(ctx, phrase)) break;
      const std::string action = "examine " + phrase;
      if (ctx.kg.is_blocked(action)) {
        const auto before = words.size();
        std::erase_if(words, [&](const std::string& w) { return ctx.kg.is_blocked(w); });
        if (words.size() == before) break;
        continue;
      }
      if (ctx.kg.attempted(loc, action, ctx.kg.epoch()) || ctx.kg.has_failed(loc, action)) break;
      Feedback fb = co_yield action;
      const std::string& resp = fb.observation.text;
      if (is_restart_prompt(resp) || is_dark_text(resp) || ctx.current() != loc) co_return;
      if (validity::is_valid(fb.p_valid)) {
        ctx.kg.add_entity(loc, phrase, resp);
        break;
      }
      const std::string bad = unknown_word(resp);
      if (bad.empty()) break;
      std::erase(words, bad);
    }
  }
}

// ---------------------------------------------------------------- Hoarder

std::vector<TakeAllItem> parse_take_all(std::string_view response) {
  static const std::regex item(R"(^\s*([^:]{1,60}?)\s*:\s+(\S.*?)\s*$)");
  std::vector<TakeAllItem> items;
  for (const auto& line : lines_of(response)) {
    if (text::trim(line).empty()) continue;
    std::smatch m;
    if (!std::regex_match(line, m, item)) return {};
    items.push_back({m[1].str(), m[2].str()});
  }
  return items;
}

std::vector<std::string> parse_inventory(std::string_view response) {
  std::vector<std::string> names;
  bool listing = false;
  for (const auto& line : lines_of(response)) {
    if (text::contains_ci(line, "carrying") || text::contains_ci(line, "you have")) {
      listing = true;
      continue;
    }
    if (!listing || line.empty() || (line[0] != ' ' && line[0] != '\t')) continue;
    std::string name = line.substr(0, line.find('('));
    name = strip_article(name);
    if (!name.empty() && (name.back() == '.' || name.back() == ',')) name.pop_back();
    name = text::trim(name);
    if (!name.empty()) names.push_back(name);
  }
  return names;
}

double Hoarder::eagerness(const AgentContext& ctx) const {
  if (ctx.in_dark || is_restart_prompt(ctx.last_observation.text)) return 0.0;
  if (!ctx.kg.has_location(ctx.current())) return 0.0;
  return done_.count({ctx.current(), ctx.kg.epoch()}) ? 0.0 : eagerness_;
}

void Hoarder::absorb(AgentContext& ctx, std::string_view response) {
  const int loc = ctx.current();
  for (const auto& item : parse_take_all(response)) {
    auto id = ctx.kg.find_entity(loc, item.name);
    if (!id) id = ctx.kg.find_entity(kg::kInventory, item.name);
    if (!id) id = ctx.kg.add_entity(loc, item.name, "").entity_id;
    if (validity::is_valid(validity::p_valid(*ctx.res.validity, item.response))) {
      ctx.kg.move_entity(*id, kg::kInventory);
    }
  }
}

ActionIterator Hoarder::take_control(AgentContext& ctx) {
  const int loc = ctx.current();
  done_.insert({loc, ctx.kg.epoch()});
  Feedback fb = co_yield std::string("take all");
  if (!parse_take_all(fb.observation.text).empty()) {
    absorb(ctx, fb.observation.text);
    co_return;
  }
  if (!validity::is_valid(fb.p_valid) || is_restart_prompt(fb.observation.text)) co_return;
  // A single object was taken and the response does not name it.
  Feedback inv = co_yield std::string("inventory");
  for (const auto& name : parse_inventory(inv.observation.text)) {
    if (ctx.kg.find_entity(kg::kInventory, name)) continue;
    if (auto here = ctx.kg.find_entity(loc, name)) {
      ctx.kg.move_entity(*here, kg::kInventory);
    } else {
      ctx.kg.add_entity(kg::kInventory, name, "");
    }
  }
}

// ---------------------------------------------------------------- Restart

double Restart::eagerness(const AgentContext& ctx) const {
  return is_restart_prompt(ctx.last_observation.text) ? eagerness_ : 0.0;
}

ActionIterator Restart::take_control(AgentContext& ctx) {
  Feedback fb = co_yield std::string("restart");
  const std::string& text = fb.observation.text;
  if (is_restart_prompt(text)) co_return;
  ctx.kg.begin_epoch();
  ctx.dark_arrival.reset();
  if (is_dark_text(text)) {
    ctx.kg.set_current(ctx.add_location_from(text));
    co_return;
  }
  if (auto match = ctx.kg.find_location(text)) {
    ctx.enter_location(match->first, text);
  } else {
    ctx.kg.set_current(ctx.add_location_from(text));
  }
}

// ---------------------------------------------------------------- YesNo

bool YesNo::is_yes_no_prompt(std::string_view t) {
  if (is_restart_prompt(t)) return false;
  if (text::contains_ci(t, "yes or no")) return true;
  // The question must open its sentence: "What do you want to ...?" is not
  // a yes/no question.
  static const std::regex question(R"((?:^|[.!?]\s+)(?:Do|Would|Will|Are|Shall|Should|Did|Can) you\b[^?]*\?\s*$)");
  std::string last;
  for (const auto& line : lines_of(t)) {
    if (!text::trim(line).empty()) last = line;
  }
  return std::regex_search(last, question);
}

double YesNo::eagerness(const AgentContext& ctx) const {
  return is_yes_no_prompt(ctx.last_observation.text) ? eagerness_ : 0.0;
}

ActionIterator YesNo::take_control(AgentContext& ctx) {
  co_yield std::string(rng::below(ctx.rng, 2) == 0 ? "yes" : "no");
}

// ---------------------------------------------------------------- Darkness

double Darkness::eagerness(const AgentContext& ctx) const {
  if (!is_dark_text(ctx.last_observation.text)) return 0.0;
  return tried_spell_ == ctx.dark_spell ? 0.0 : eagerness_;
}

std::string Darkness::light_action(const AgentContext& ctx) {
  const auto& inv = ctx.kg.inventory();
  for (int id : inv) {
    const kg::Entity& e = ctx.kg.entity(id);
    if ((e.attributes & kg::kSwitchable) && e.state.on != kg::Tri::kTrue) {
      return "turn on " + action_name(ctx.kg, id, inv);
    }
  }
  static const std::vector<std::string> kLights = {"lamp", "lantern", "torch", "light", "candle"};
  for (int id : inv) {
    for (const auto& n : ctx.kg.entity(id).names) {
      const auto toks = text::tokenize(n);
      if (std::any_of(toks.begin(), toks.end(), [](const std::string& w) {
            return std::find(kLights.begin(), kLights.end(), w) != kLights.end();
          })) {
        return "turn on " + action_name(ctx.kg, id, inv);
      }
    }
  }
  return "turn on light";
}

ActionIterator Darkness::take_control(AgentContext& ctx) {
  tried_spell_ = ctx.dark_spell;
  std::string action = light_action(ctx);
  if (ctx.kg.is_blocked(action)) action = "turn on light";
  if (ctx.kg.is_blocked(action)) co_return;
  Feedback fb = co_yield action;
  if (is_dark_text(fb.observation.text) || !validity::is_valid(fb.p_valid)) co_return;
  Feedback look = co_yield std::string("look");
  const std::string desc = look.observation.text;
  if (is_dark_text(desc) || is_restart_prompt(desc) || text::trim(desc).empty()) co_return;

  if (ctx.dark_arrival) {
    const DarkArrival arrival = *ctx.dark_arrival;
    ctx.dark_arrival.reset();
    const auto match = ctx.kg.find_location(desc);
    const int id = match ? match->first : ctx.add_location_from(desc);
    ctx.kg.connect(arrival.from, arrival.direction, id);
    kg::NavAttempt& nav = ctx.kg.location(arrival.from).navigation[arrival.direction];
    nav.status = kg::NavStatus::kSucceeded;
    nav.to = id;
    ctx.enter_location(id, desc);
    co_return;
  }
  // The location was first seen in the dark; give it its real description.
  kg::Location& here = ctx.kg.location(ctx.current());
  if (is_dark_text(here.description)) {
    here.name = first_line(desc);
    here.description = desc;
    ctx.take_narrative(here.location_id);
    ctx.add_narrative(here.location_id, desc);
  }
}

// ---------------------------------------------------------------- YouHaveTo

std::optional<std::string> YouHaveTo::hint(std::string_view t) {
  static const std::regex have_to(R"(You(?:'ll| will) have to (.+?) first)", std::regex::icase);
  static const std::regex need(R"(You (?:need|must) (?:to )?(.+?)(?: first)?[.!])", std::regex::icase);
  std::cmatch m;
  if (std::regex_search(t.begin(), t.end(), m, have_to) || std::regex_search(t.begin(), t.end(), m, need)) {
    std::string phrase = text::join(text::tokenize(m[1].str()));
    if (!phrase.empty()) return phrase;
  }
  return std::nullopt;
}

std::optional<std::string> YouHaveTo::pending(const AgentContext& ctx) const {
  std::vector<const engine::Observation*> seen;
  for (const auto& o : ctx.grant_observations) seen.push_back(&o);
  if (seen.empty()) seen.push_back(&ctx.last_observation);
  for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
    auto h = hint((*it)->text);
    if (!h || ctx.kg.is_blocked(*h)) continue;
    if (done_.count({ctx.current(), ctx.kg.epoch(), *h})) continue;
    return h;
  }
  return std::nullopt;
}

double YouHaveTo::eagerness(const AgentContext& ctx) const {
  return pending(ctx) ? eagerness_ : 0.0;
}

ActionIterator YouHaveTo::take_control(AgentContext& ctx) {
  const auto h = pending(ctx);
  if (!h) co_return;
  done_.insert({ctx.current(), ctx.kg.epoch(), *h});
  co_yield *h;
}

// ---------------------------------------------------------------- Idler

double Idler::eagerness(const AgentContext&) const { return eagerness_; }

ActionIterator Idler::take_control(AgentContext& ctx) {
  constexpr int kDraws = 64;
  const auto& verbs = *ctx.res.verbs;
  const auto scope = nearby_entities(ctx.kg);
  const int loc = ctx.current();
  for (int i = 0; i < kDraws && !verbs.empty(); ++i) {
    std::string action = verbs[rng::below(ctx.rng, verbs.size())];
    if (!scope.empty()) {
      const int e = scope[rng::below(ctx.rng, scope.size())];
      action += " " + action_name(ctx.kg, e, scope);
    }
    if (ctx.kg.is_blocked(action) || ctx.kg.attempted(loc, action, ctx.kg.epoch())) continue;
    co_yield action;
    co_return;
  }
  co_yield std::string("look");
}

// ---------------------------------------------------------------- LookOnly

double LookOnly::eagerness(const AgentContext&) const { return eagerness_; }

ActionIterator LookOnly::take_control(AgentContext&) { co_yield std::string("look"); }

// ---------------------------------------------------------------- registry

const std::vector<std::string>& all_module_names() {
  static const std::vector<std::string> names = {"Restart",  "YesNo",      "Darkness",  "YouHaveTo", "Hoarder",
                                                 "Examiner", "Interactor", "Navigator", "Idler",     "LookOnly"};
  return names;
}

const std::vector<std::string>& default_module_names() {
  static const std::vector<std::string> names = {"Restart",  "YesNo",      "Darkness",  "YouHaveTo", "Hoarder",
                                                 "Examiner", "Interactor", "Navigator", "Idler"};
  return names;
}

std::unique_ptr<DecisionModule> make_module(std::string_view name, const EagernessTable& t) {
  if (name == "Restart") return std::make_unique<Restart>(t.restart);
  if (name == "YesNo") return std::make_unique<YesNo>(t.yes_no);
  if (name == "Darkness") return std::make_unique<Darkness>(t.darkness);
  if (name == "YouHaveTo") return std::make_unique<YouHaveTo>(t.you_have_to);
  if (name == "Hoarder") return std::make_unique<Hoarder>(t.hoarder);
  if (name == "Examiner") return std::make_unique<Examiner>(t.examiner);
  if (name == "Interactor") return std::make_unique<Interactor>(t.interactor);
  if (name == "Navigator") return std::make_unique<Navigator>(t.navigator);
  if (name == "Idler") return std::make_unique<Idler>(t.idler);
  if (name == "LookOnly") return std::make_unique<LookOnly>(t.look_only);
  throw UnknownModuleError("unknown decision module: " + std::string(name));
}

}  // namespace nail::agent
