#include "nail/kg.hpp"

#include <algorithm>

#include "nail/textutils.hpp"
#include "nail/validity.hpp"

namespace nail::kg {

namespace {

bool is_article(std::string_view w) {
  return w == "the" || w == "a" || w == "an" || w == "your" || w == "some";
}

std::vector<std::string> content_tokens(std::string_view phrase) {
  auto toks = text::tokenize(phrase);
  toks.erase(std::remove_if(toks.begin(), toks.end(), [](const std::string& w) { return is_article(w); }),
             toks.end());
  return toks;
}

bool subset_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const std::string& w) { return std::find(b.begin(), b.end(), w) != b.end(); });
}

bool is_preposition(std::string_view w) {
  static constexpr std::string_view kPreps[] = {"with", "in", "into", "on", "onto", "to", "about",
                                                 "at", "under", "from", "inside", "through", "using"};
  return std::find(std::begin(kPreps), std::end(kPreps), w) != std::end(kPreps);
}

enum class Effect { kNone, kTake, kDrop, kOpen, kClose, kLock, kUnlock, kOn, kOff, kConsume };

struct VerbEffect {
  std::vector<std::string> words;
  Effect effect;
};

const std::vector<VerbEffect>& verb_effects() {
  static const std::vector<VerbEffect> table = {
      {{"pick", "up"}, Effect::kTake},   {{"take"}, Effect::kTake},
      {{"get"}, Effect::kTake},          {{"grab"}, Effect::kTake},
      {{"put", "down"}, Effect::kDrop},  {{"drop"}, Effect::kDrop},
      {{"open"}, Effect::kOpen},         {{"close"}, Effect::kClose},
      {{"shut"}, Effect::kClose},        {{"lock"}, Effect::kLock},
      {{"unlock"}, Effect::kUnlock},     {{"turn", "on"}, Effect::kOn},
      {{"switch", "on"}, Effect::kOn},   {{"light"}, Effect::kOn},
      {{"turn", "off"}, Effect::kOff},   {{"switch", "off"}, Effect::kOff},
      {{"extinguish"}, Effect::kOff},    {{"eat"}, Effect::kConsume},
      {{"drink"}, Effect::kConsume},
  };
  return table;
}

}  // namespace

Location& KnowledgeGraph::add_location(std::string name, std::string description) {
  if (text::trim(description).empty()) throw KgError("location description must be non-empty");
  Location loc;
  loc.location_id = static_cast<int>(locations_.size());
  loc.name = std::move(name);
  loc.description = std::move(description);
  locations_.push_back(std::move(loc));
  if (current_ < 0) current_ = locations_.back().location_id;
  return locations_.back();
}

std::optional<std::pair<int, double>> KnowledgeGraph::find_location(std::string_view description) const {
  std::optional<std::pair<int, double>> best;
  for (const auto& loc : locations_) {
    const double r = text::fuzzy_ratio(loc.description, description);
    if (r >= kSameLocationThreshold && (!best || r > best->second)) best = {loc.location_id, r};
  }
  return best;
}

void KnowledgeGraph::connect(int from, Direction direction, int to) {
  if (!has_location(from) || !has_location(to)) throw KgError("connect: unknown location id");
  connections_.insert({from, direction, to});
}

const Location& KnowledgeGraph::location(int id) const {
  if (!has_location(id)) throw KgError("unknown location id " + std::to_string(id));
  return locations_[static_cast<std::size_t>(id)];
}

Location& KnowledgeGraph::location(int id) {
  if (!has_location(id)) throw KgError("unknown location id " + std::to_string(id));
  return locations_[static_cast<std::size_t>(id)];
}

void KnowledgeGraph::set_current(int id) {
  if (!has_location(id)) throw KgError("unknown location id " + std::to_string(id));
  current_ = id;
}

std::vector<int>& KnowledgeGraph::place_list(int place) {
  if (place == kInventory) return inventory_;
  return location(place).entities;
}

void KnowledgeGraph::detach(int entity_id) {
  Entity& e = entity(entity_id);
  if (e.place == kNowhere) return;
  auto& list = place_list(e.place);
  list.erase(std::remove(list.begin(), list.end(), entity_id), list.end());
  e.place = kNowhere;
}

std::optional<int> KnowledgeGraph::find_entity(int place, std::string_view phrase) const {
  if (place != kInventory && !has_location(place)) return std::nullopt;
  const auto want = content_tokens(phrase);
  if (want.empty()) return std::nullopt;
  const auto& list = place == kInventory ? inventory_ : location(place).entities;
  for (int id : list) {
    for (const auto& n : entity(id).names) {
      if (content_tokens(n) == want) return id;
    }
  }
  for (int id : list) {
    for (const auto& n : entity(id).names) {
      if (subset_of(want, content_tokens(n))) return id;
    }
  }
  return std::nullopt;
}

Entity& KnowledgeGraph::add_entity(int place, const std::string& name, const std::string& description) {
  if (place != kInventory && !has_location(place)) throw KgError("add_entity: unknown place");
  const std::string clean = text::trim(name);
  const auto toks = content_tokens(clean);
  if (toks.empty()) throw KgError("entity name must be non-empty");
  for (int id : place_list(place)) {
    Entity& e = entity(id);
    for (const auto& n : e.names) {
      const auto other = content_tokens(n);
      if (subset_of(other, toks) || subset_of(toks, other)) {
        if (std::find(e.names.begin(), e.names.end(), clean) == e.names.end()) e.names.push_back(clean);
        if (e.description.empty()) e.description = description;
        return e;
      }
    }
  }
  Entity e;
  e.entity_id = static_cast<int>(entities_.size());
  e.names = {clean};
  e.description = description;
  e.place = place;
  entities_.push_back(std::move(e));
  place_list(place).push_back(entities_.back().entity_id);
  return entities_.back();
}

void KnowledgeGraph::move_entity(int entity_id, int place) {
  if (place != kInventory && place != kNowhere && !has_location(place)) throw KgError("move_entity: unknown place");
  detach(entity_id);
  if (place != kNowhere) place_list(place).push_back(entity_id);
  entity(entity_id).place = place;
}

void KnowledgeGraph::record_action(int location_id, std::string action, std::string response, double p_valid) {
  location(location_id).action_records.push_back({std::move(action), std::move(response), p_valid, epoch_});
}

bool KnowledgeGraph::has_failed(int location_id, std::string_view action) const {
  const auto& recs = location(location_id).action_records;
  for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
    if (it->action == action) return !validity::is_valid(it->p_valid);
  }
  return false;
}

bool KnowledgeGraph::attempted(int location_id, std::string_view action, int epoch) const {
  const auto& recs = location(location_id).action_records;
  return std::any_of(recs.begin(), recs.end(),
                     [&](const ActionRecord& r) { return r.epoch == epoch && r.action == action; });
}

void KnowledgeGraph::apply_action_effects(std::string_view action, std::string_view response, double p_valid) {
  (void)response;
  if (!validity::is_valid(p_valid) || current_ < 0) return;
  const auto toks = text::tokenize(action);
  const VerbEffect* match = nullptr;
  for (const auto& ve : verb_effects()) {
    if (ve.words.size() <= toks.size() && std::equal(ve.words.begin(), ve.words.end(), toks.begin()) &&
        (!match || ve.words.size() > match->words.size())) {
      match = &ve;
    }
  }
  if (!match) return;  // uncommon verb: the record is all we keep
  std::vector<std::string> object;
  for (std::size_t i = match->words.size(); i < toks.size() && !is_preposition(toks[i]); ++i) {
    object.push_back(toks[i]);
  }
  if (object.empty() || (object.size() == 1 && object[0] == "all")) return;
  const std::string phrase = text::join(object);

  const bool from_inventory_first = match->effect == Effect::kDrop || match->effect == Effect::kConsume;
  std::optional<int> id;
  if (match->effect == Effect::kTake) {
    id = find_entity(current_, phrase);
  } else if (from_inventory_first) {
    id = find_entity(kInventory, phrase);
    if (!id && match->effect == Effect::kConsume) id = find_entity(current_, phrase);
  } else {
    id = find_entity(current_, phrase);
    if (!id) id = find_entity(kInventory, phrase);
  }
  if (!id) {
    warnings_.push_back("no entity '" + phrase + "' for action '" + std::string(action) + "'");
    return;
  }
  Entity& e = entity(*id);
  switch (match->effect) {
    case Effect::kTake: move_entity(*id, kInventory); break;
    case Effect::kDrop: move_entity(*id, current_); break;
    case Effect::kOpen: e.state.open = Tri::kTrue; e.attributes |= kOpenable; break;
    case Effect::kClose: e.state.open = Tri::kFalse; e.attributes |= kOpenable; break;
    case Effect::kLock: e.state.locked = Tri::kTrue; e.attributes |= kLockable; break;
    case Effect::kUnlock: e.state.locked = Tri::kFalse; e.attributes |= kLockable; break;
    case Effect::kOn: e.state.on = Tri::kTrue; e.attributes |= kSwitchable; break;
    case Effect::kOff: e.state.on = Tri::kFalse; e.attributes |= kSwitchable; break;
    case Effect::kConsume:
      e.state.used = Tri::kTrue;
      move_entity(*id, kNowhere);
      break;
    case Effect::kNone: break;
  }
}

void KnowledgeGraph::note_unrecognized(std::string_view word) {
  const auto w = text::to_lower(text::trim(word));
  if (!w.empty()) unrecognized_.insert(w);
}

bool KnowledgeGraph::is_blocked(std::string_view action) const {
  if (unrecognized_.empty()) return false;
  for (const auto& t : text::tokenize(action)) {
    if (unrecognized_.count(t)) return true;
  }
  return false;
}

void KnowledgeGraph::begin_epoch() {
  ++epoch_;
  for (int id : std::vector<int>(inventory_)) move_entity(id, kNowhere);
}

}  // namespace nail::kg
