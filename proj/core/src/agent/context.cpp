#include "nail/agent/context.hpp"

#include <algorithm>
#include <map>

namespace nail::agent {

bool AgentContext::has_narrative() const {
  auto it = narrative.find(current());
  return it != narrative.end() && !it->second.empty();
}

void AgentContext::add_narrative(int location, std::string text) {
  if (!text::trim(text).empty()) narrative[location].push_back(std::move(text));
}

std::vector<std::string> AgentContext::take_narrative(int location) {
  auto it = narrative.find(location);
  if (it == narrative.end()) return {};
  std::vector<std::string> out = std::move(it->second);
  narrative.erase(it);
  return out;
}

int AgentContext::add_location_from(const std::string& text) {
  const int id = kg.add_location(first_line(text), text).location_id;
  add_narrative(id, text);
  narrated.insert({id, kg.epoch()});
  return id;
}

void AgentContext::enter_location(int id, const std::string& text) {
  kg.set_current(id);
  if (narrated.insert({id, kg.epoch()}).second) add_narrative(id, text);
}

bool is_dark_text(std::string_view t) {
  return text::contains_ci(t, "pitch black") || text::contains_ci(t, "too dark to see");
}

bool is_restart_prompt(std::string_view t) {
  return text::contains_ci(t, "restart") && text::contains_ci(t, "restore") && text::contains_ci(t, "quit");
}

std::string first_line(std::string_view t) {
  const std::string s = text::trim(t);
  return s.substr(0, s.find('\n'));
}

std::vector<int> nearby_entities(const kg::KnowledgeGraph& kg) {
  std::vector<int> out;
  if (kg.has_location(kg.current_location())) {
    const auto& here = kg.location(kg.current_location()).entities;
    out.insert(out.end(), here.begin(), here.end());
  }
  out.insert(out.end(), kg.inventory().begin(), kg.inventory().end());
  return out;
}

namespace {

std::vector<std::string> name_words(const std::string& name) {
  auto toks = text::tokenize(name);
  toks.erase(std::remove_if(toks.begin(), toks.end(),
                            [](const std::string& w) {
                              return w == "the" || w == "a" || w == "an" || w == "your" || w == "some";
                            }),
             toks.end());
  return toks;
}

}  // namespace

std::string action_name(const kg::KnowledgeGraph& kg, int entity_id, const std::vector<int>& scope) {
  const kg::Entity& e = kg.entity(entity_id);
  const auto words = name_words(e.name());
  const std::string head = words.empty() ? e.name() : words.back();
  bool shared = false;
  for (int other : scope) {
    if (other == entity_id) continue;
    for (const auto& n : kg.entity(other).names) {
      const auto w = name_words(n);
      if (!w.empty() && w.back() == head) shared = true;
    }
  }
  if (!shared) return head;
  // Shortest name that no other nearby entity could also answer to.
  std::string best;
  for (const auto& n : e.names) {
    const auto w = name_words(n);
    if (w.empty()) continue;
    bool ambiguous = false;
    for (int other : scope) {
      if (other == entity_id) continue;
      for (const auto& on : kg.entity(other).names) {
        const auto ow = name_words(on);
        if (std::all_of(w.begin(), w.end(),
                        [&](const std::string& t) { return std::find(ow.begin(), ow.end(), t) != ow.end(); })) {
          ambiguous = true;
        }
      }
    }
    const std::string joined = text::join(w);
    if (!ambiguous && (best.empty() || joined.size() < best.size())) best = joined;
  }
  return best.empty() ? text::join(name_words(e.name())) : best;
}

}  // namespace nail::agent
