#include <algorithm>
#include <set>

#include "nail/agent/modules.hpp"

namespace nail::agent {

namespace {

std::string fill(const std::string& tmpl, const std::string& x, const std::string& y) {
  std::string out;
  for (const auto& w : text::tokenize(tmpl)) {
    if (!out.empty()) out += ' ';
    out += w == "x" ? x : w == "y" ? y : w;
  }
  return out;
}

std::vector<std::string> nearby_names(const AgentContext& ctx) {
  const auto scope = nearby_entities(ctx.kg);
  std::vector<std::string> names;
  for (int id : scope) {
    std::string n = action_name(ctx.kg, id, scope);
    if (!n.empty() && std::find(names.begin(), names.end(), n) == names.end()) names.push_back(std::move(n));
  }
  return names;
}

// Verb groups where any member of the second undoes any member of the first.
struct InverseGroup {
  std::vector<std::string> done;
  std::vector<std::string> undo;
};

const std::vector<InverseGroup>& inverse_groups() {
  static const std::vector<InverseGroup> groups = {
      {{"open"}, {"close", "shut"}},
      {{"close", "shut"}, {"open"}},
      {{"unlock"}, {"lock"}},
      {{"lock"}, {"unlock"}},
      {{"take", "get", "pick up"}, {"drop", "put down", "throw", "discard"}},
      {{"turn on", "switch on", "light"}, {"turn off", "switch off", "extinguish", "blow out", "douse"}},
      {{"wear"}, {"remove", "take off"}},
  };
  return groups;
}

// True when the action would reverse one that worked earlier this epoch.
bool undoes_progress(const kg::KnowledgeGraph& kg, const std::string& action) {
  for (const auto& g : inverse_groups()) {
    for (const auto& undo : g.undo) {
      if (action.rfind(undo + " ", 0) != 0) continue;
      const std::string object = action.substr(undo.size());
      for (const auto& loc : kg.locations()) {
        for (const auto& r : loc.action_records) {
          if (r.epoch != kg.epoch() || !validity::is_valid(r.p_valid)) continue;
          for (const auto& done : g.done) {
            if (r.action == done + object) return true;
          }
        }
      }
    }
  }
  return false;
}

bool is_interaction(const std::string& action) {
  const auto toks = text::tokenize(action);
  if (toks.empty()) return false;
  if (toks.size() == 1 && (parse_direction(toks[0]) || toks[0] == "look" || toks[0] == "inventory")) return false;
  return toks[0] != "examine";
}

// Object words of an action: everything after the verb except prepositions.
std::set<std::string> object_words(const std::string& action) {
  static const std::set<std::string> preps = {"with", "to", "in", "on", "about", "the", "a", "an"};
  std::set<std::string> out;
  const auto toks = text::tokenize(action);
  for (std::size_t i = 1; i < toks.size(); ++i) {
    if (!preps.count(toks[i])) out.insert(toks[i]);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& pair_templates() {
  static const std::vector<std::string> templates = {
      "put x in y",  "open x with y", "unlock x with y", "give x to y",  "attack x with y",
      "tie x to y",  "pour x on y",   "show x to y",     "ask x about y", "use x on y",
  };
  return templates;
}

std::vector<std::string> Interactor::candidates(const AgentContext& ctx) {
  const auto names = nearby_names(ctx);
  std::vector<std::string> out;
  for (const auto& v : *ctx.res.verbs) {
    for (const auto& n : names) out.push_back(v + " " + n);
  }
  for (const auto& t : pair_templates()) {
    for (const auto& x : names) {
      for (const auto& y : names) {
        if (x != y) out.push_back(fill(t, x, y));
      }
    }
  }
  return lm::rank_actions(*ctx.res.lm, std::move(out));
}

std::string Interactor::cache_key(const AgentContext& ctx) const {
  std::string key = std::to_string(ctx.current()) + "/" + std::to_string(ctx.kg.epoch());
  for (const auto& n : nearby_names(ctx)) key += "/" + n;
  return key;
}

bool Interactor::usable(const AgentContext& ctx, const std::string& action) const {
  const int loc = ctx.current();
  return !ctx.kg.is_blocked(action) && !ctx.kg.has_failed(loc, action) &&
         !ctx.kg.attempted(loc, action, ctx.kg.epoch()) && !undoes_progress(ctx.kg, action);
}

// Filters only ever remove actions while the key is unchanged, so the cursor
// never has to move back.
const Interactor::Cache& Interactor::refresh(const AgentContext& ctx) const {
  std::string key = cache_key(ctx);
  if (key != cache_.key) {
    cache_ = Cache{std::move(key), candidates(ctx), 0, 0, {}, {}};
    cursor_ = 0;
  }
  // Progress here can turn an earlier failure into a success ("open door"
  // after "unlock door with key"), so failures sharing an object get one retry.
  const auto& records = ctx.kg.location(ctx.current()).action_records;
  for (std::size_t i = cache_.progress; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.epoch != ctx.kg.epoch() || !validity::is_valid(r.p_valid) || !is_interaction(r.action)) continue;
    const auto words = object_words(r.action);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& f = records[j];
      if (f.epoch != ctx.kg.epoch() || validity::is_valid(f.p_valid) || f.action == r.action) continue;
      if (cache_.retried.count(f.action) || ctx.kg.is_blocked(f.action)) continue;
      const auto other = object_words(f.action);
      if (std::any_of(other.begin(), other.end(), [&](const std::string& w) { return words.count(w) > 0; })) {
        cache_.retried.insert(f.action);
        cache_.retry.push_back(f.action);
      }
    }
  }
  cache_.progress = records.size();
  std::erase_if(cache_.retry, [&](const std::string& a) { return ctx.kg.is_blocked(a) || undoes_progress(ctx.kg, a); });
  while (cursor_ < cache_.ranked.size() && !usable(ctx, cache_.ranked[cursor_])) ++cursor_;
  return cache_;
}

std::vector<std::string> Interactor::remaining(const AgentContext& ctx) const {
  const Cache& c = refresh(ctx);
  std::vector<std::string> out;
  for (std::size_t i = cursor_; i < c.ranked.size(); ++i) {
    if (usable(ctx, c.ranked[i])) out.push_back(c.ranked[i]);
  }
  return out;
}

double Interactor::eagerness(const AgentContext& ctx) const {
  if (!ctx.kg.has_location(ctx.current()) || ctx.in_dark) return 0.0;
  const Cache& c = refresh(ctx);
  if (c.retry.empty() && cursor_ >= c.ranked.size()) return 0.0;
  return eagerness_ / (1.0 + c.consumed);
}

ActionIterator Interactor::take_control(AgentContext& ctx) {
  refresh(ctx);
  std::string action;
  if (!cache_.retry.empty()) {
    action = cache_.retry.front();
    cache_.retry.erase(cache_.retry.begin());
  } else if (cursor_ < cache_.ranked.size()) {
    action = cache_.ranked[cursor_++];
  } else {
    co_return;
  }
  ++cache_.consumed;
  co_yield action;
}

}  // namespace nail::agent
