#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "engine_internal.hpp"
#include "nail/engine.hpp"
#include "nail/textutils.hpp"

namespace nail::engine {

using nlohmann::json;

const RoomSpec* GameSpec::find_room(std::string_view id) const {
  for (const auto& r : rooms) {
    if (r.room_id == id) return &r;
  }
  return nullptr;
}

const ObjectSpec* GameSpec::find_object(std::string_view id) const {
  for (const auto& o : objects) {
    if (o.object_id == id) return &o;
  }
  return nullptr;
}

const PromptSpec* GameSpec::find_prompt(std::string_view id) const {
  for (const auto& p : prompts) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::map<std::string, int> GameSpec::score_events() const {
  std::map<std::string, int> events;
  for (const auto& r : rooms) {
    if (r.score_on_first_visit > 0) events["visit:" + r.room_id] = r.score_on_first_visit;
  }
  for (const auto& o : objects) {
    if (o.take_score > 0) events["take:" + o.object_id] = o.take_score;
    for (std::size_t i = 0; i < o.verb_responses.size(); ++i) {
      if (o.verb_responses[i].score > 0) {
        events["verb:" + o.object_id + ":" + std::to_string(i)] = o.verb_responses[i].score;
      }
    }
  }
  for (const auto& p : prompts) {
    if (p.yes.score > 0) events["prompt:" + p.id + ":yes"] = p.yes.score;
    if (p.no.score > 0) events["prompt:" + p.id + ":no"] = p.no.score;
  }
  return events;
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw ValidationError(what); }

Condition parse_condition(const json& j) {
  if (!j.is_object() || j.size() != 1) invalid("condition must be a one-key object");
  Condition c;
  const auto& [key, val] = *j.items().begin();
  if (key == "flag" || key == "not_flag") {
    c.kind = key == "flag" ? Condition::Kind::kFlag : Condition::Kind::kNotFlag;
    c.subject = val.get<std::string>();
  } else if (key == "state") {
    if (!val.is_array() || val.size() != 3) invalid("state condition needs [object, key, bool]");
    c.kind = Condition::Kind::kState;
    c.subject = val[0].get<std::string>();
    c.key = val[1].get<std::string>();
    c.value = val[2].get<bool>();
  } else if (key == "holding" || key == "not_holding") {
    c.kind = key == "holding" ? Condition::Kind::kHolding : Condition::Kind::kNotHolding;
    c.subject = val.get<std::string>();
  } else if (key == "at") {
    c.kind = Condition::Kind::kAt;
    c.subject = val.get<std::string>();
  } else {
    invalid("unknown condition kind: " + key);
  }
  return c;
}

std::vector<Condition> parse_conditions(const json& j, const char* field) {
  std::vector<Condition> out;
  if (auto it = j.find(field); it != j.end()) {
    for (const auto& c : *it) out.push_back(parse_condition(c));
  }
  return out;
}

Effect parse_effect(const json& j) {
  if (!j.is_object() || j.size() != 1) invalid("effect must be a one-key object");
  Effect e;
  const auto& [key, val] = *j.items().begin();
  if (key == "set_flag" || key == "clear_flag") {
    e.kind = key == "set_flag" ? Effect::Kind::kSetFlag : Effect::Kind::kClearFlag;
    e.subject = val.get<std::string>();
  } else if (key == "set") {
    if (!val.is_array() || val.size() != 3) invalid("set effect needs [object, key, bool]");
    e.kind = Effect::Kind::kSetState;
    e.subject = val[0].get<std::string>();
    e.key = val[1].get<std::string>();
    e.value = val[2].get<bool>();
  } else if (key == "move") {
    if (!val.is_array() || val.size() != 2) invalid("move effect needs [object, place]");
    e.kind = Effect::Kind::kMove;
    e.subject = val[0].get<std::string>();
    e.key = val[1].get<std::string>();
  } else if (key == "prompt") {
    e.kind = Effect::Kind::kPrompt;
    e.subject = val.get<std::string>();
  } else if (key == "die") {
    e.kind = Effect::Kind::kDie;
  } else if (key == "finish") {
    e.kind = Effect::Kind::kFinish;
  } else {
    invalid("unknown effect kind: " + key);
  }
  return e;
}

std::vector<Effect> parse_effects(const json& j) {
  std::vector<Effect> out;
  if (auto it = j.find("effects"); it != j.end()) {
    for (const auto& e : *it) out.push_back(parse_effect(e));
  }
  return out;
}

unsigned parse_attribute(const std::string& name) {
  if (name == "openable") return kOpenable;
  if (name == "lockable") return kLockable;
  if (name == "switchable") return kSwitchable;
  if (name == "consumable") return kConsumable;
  invalid("unknown attribute: " + name);
}

PromptAnswer parse_answer(const json& j) {
  PromptAnswer a;
  a.response = j.value("response", "");
  a.effects = parse_effects(j);
  a.score = j.value("score", 0);
  return a;
}

GameSpec from_json(const json& doc) {
  if (!doc.is_object()) invalid("game document must be an object");
  GameSpec g;
  const json meta = doc.value("meta", json::object());
  g.game_id = meta.value("game_id", "");
  g.title = meta.value("title", g.game_id);
  g.start_room = meta.value("start_room", "");
  g.max_score = meta.value("max_score", 0);
  g.supports_take_all = meta.value("supports_take_all", true);
  g.canned_failures = meta.value("canned_failures", std::vector<std::string>{
      "Nothing obvious happens.", "That doesn't seem to do anything.",
      "You can't do that.", "That would achieve nothing."});
  for (const auto& f : meta.value("initial_flags", std::vector<std::string>{})) {
    g.initial_flags.insert(f);
  }

  for (const auto& jr : doc.value("rooms", json::array())) {
    RoomSpec r;
    r.room_id = jr.at("id").get<std::string>();
    r.name = jr.value("name", r.room_id);
    r.description = jr.value("description", "");
    r.is_dark = jr.value("dark", false);
    r.grue = jr.value("grue", false);
    r.score_on_first_visit = jr.value("score_on_first_visit", 0);
    const json exits = jr.value("exits", json::object());
    for (const auto& [dir_name, jx] : exits.items()) {
      const auto dir = parse_direction(dir_name);
      if (!dir || to_string(*dir) != dir_name) {
        invalid("room " + r.room_id + ": exit key '" + dir_name +
                "' is not one of the twelve canonical directions");
      }
      ExitSpec x;
      if (jx.is_string()) {
        x.to = jx.get<std::string>();
      } else {
        x.to = jx.value("to", "");
        x.when = parse_conditions(jx, "when");
        x.blocked = jx.value("blocked", "");
      }
      r.exits[*dir] = std::move(x);
    }
    g.rooms.push_back(std::move(r));
  }

  for (const auto& jo : doc.value("objects", json::array())) {
    ObjectSpec o;
    o.object_id = jo.at("id").get<std::string>();
    o.names = jo.value("names", std::vector<std::string>{});
    o.location = jo.value("location", std::string(kNowhere));
    o.portable = jo.value("portable", false);
    for (const auto& a : jo.value("attributes", std::vector<std::string>{})) {
      o.attributes |= parse_attribute(a);
    }
    o.container = jo.value("container", false);
    o.light_source = jo.value("light_source", false);
    o.listed = jo.value("listed", true);
    o.article = jo.value("article", "a");
    o.key = jo.value("key", "");
    o.initially_open = jo.value("open", false);
    o.initially_locked = jo.value("locked", false);
    o.initially_on = jo.value("on", false);
    o.examine_text = jo.value("examine_text", "");
    o.take_score = jo.value("take_score", 0);
    for (const auto& jv : jo.value("verb_responses", json::array())) {
      VerbResponse v;
      v.verb = jv.at("verb").get<std::string>();
      v.prep = jv.value("prep", "");
      v.second = jv.value("second", "");
      v.when = parse_conditions(jv, "when");
      v.response = jv.at("response").get<std::string>();
      v.else_response = jv.value("else", "");
      v.effects = parse_effects(jv);
      v.score = jv.value("score", 0);
      o.verb_responses.push_back(std::move(v));
    }
    g.objects.push_back(std::move(o));
  }

  for (const auto& jp : doc.value("prompts", json::array())) {
    PromptSpec p;
    p.id = jp.at("id").get<std::string>();
    const std::string kind = jp.value("kind", "yesno");
    if (kind == "yesno") {
      p.kind = PromptSpec::Kind::kYesNo;
    } else if (kind == "restart") {
      p.kind = PromptSpec::Kind::kRestart;
    } else {
      invalid("prompt " + p.id + ": unknown kind " + kind);
    }
    p.text = jp.at("text").get<std::string>();
    p.yes = parse_answer(jp.value("yes", json::object()));
    p.no = parse_answer(jp.value("no", json::object()));
    g.prompts.push_back(std::move(p));
  }

  const json flavor = doc.value("flavor", json::object());
  for (const auto& [room, list] : flavor.items()) {
    for (const auto& jf : list) {
      g.flavor_texts[room].push_back(
          {jf.at("text").get<std::string>(), jf.value("probability", 0.5)});
    }
  }

  for (const auto& w : detail::builtin_vocabulary()) g.vocabulary.insert(w);
  for (const auto& v : detail::builtin_verbs()) {
    for (auto& t : text::tokenize(v)) g.vocabulary.insert(t);
  }
  for (const auto& o : g.objects) {
    for (const auto& n : o.names) {
      for (auto& t : text::tokenize(n)) g.vocabulary.insert(t);
    }
    for (const auto& v : o.verb_responses) {
      for (auto& t : text::tokenize(v.verb)) g.vocabulary.insert(t);
      for (auto& t : text::tokenize(v.prep)) g.vocabulary.insert(t);
    }
  }
  for (const auto& w : doc.value("vocabulary_extra", std::vector<std::string>{})) {
    for (auto& t : text::tokenize(w)) g.vocabulary.insert(t);
  }
  return g;
}

void validate(const GameSpec& g) {
  if (g.game_id.empty()) invalid("meta.game_id is required");
  if (g.rooms.empty()) invalid("a game needs at least one room");
  std::set<std::string> room_ids, object_ids, prompt_ids;
  for (const auto& r : g.rooms) {
    if (!room_ids.insert(r.room_id).second) invalid("duplicate room id: " + r.room_id);
    if (text::trim(r.description).empty()) invalid("room " + r.room_id + ": description is empty");
  }
  for (const auto& o : g.objects) {
    if (!object_ids.insert(o.object_id).second) invalid("duplicate object id: " + o.object_id);
    if (room_ids.count(o.object_id)) invalid("object id collides with room id: " + o.object_id);
  }
  for (const auto& p : g.prompts) {
    if (!prompt_ids.insert(p.id).second) invalid("duplicate prompt id: " + p.id);
  }
  if (!room_ids.count(g.start_room)) invalid("start_room '" + g.start_room + "' is not a declared room");

  auto check_condition = [&](const Condition& c, const std::string& where) {
    switch (c.kind) {
      case Condition::Kind::kState:
        if (c.key != "open" && c.key != "locked" && c.key != "on") {
          invalid(where + ": unknown state key " + c.key);
        }
        [[fallthrough]];
      case Condition::Kind::kHolding:
      case Condition::Kind::kNotHolding:
        if (!object_ids.count(c.subject)) invalid(where + ": unknown object " + c.subject);
        break;
      case Condition::Kind::kAt:
        if (!room_ids.count(c.subject)) invalid(where + ": unknown room " + c.subject);
        break;
      default:
        break;
    }
  };
  auto check_effect = [&](const Effect& e, const std::string& where) {
    switch (e.kind) {
      case Effect::Kind::kSetState:
        if (e.key != "open" && e.key != "locked" && e.key != "on") {
          invalid(where + ": unknown state key " + e.key);
        }
        if (!object_ids.count(e.subject)) invalid(where + ": unknown object " + e.subject);
        break;
      case Effect::Kind::kMove:
        if (!object_ids.count(e.subject)) invalid(where + ": unknown object " + e.subject);
        if (e.key != kInventory && e.key != kNowhere && !room_ids.count(e.key) &&
            !object_ids.count(e.key)) {
          invalid(where + ": unknown destination " + e.key);
        }
        break;
      case Effect::Kind::kPrompt:
        if (!prompt_ids.count(e.subject)) invalid(where + ": unknown prompt " + e.subject);
        break;
      default:
        break;
    }
  };

  for (const auto& r : g.rooms) {
    for (const auto& [dir, x] : r.exits) {
      const std::string where = "room " + r.room_id + " exit " + std::string(to_string(dir));
      if (!x.to.empty() && !room_ids.count(x.to)) {
        invalid(where + ": target '" + x.to + "' is not a declared room");
      }
      for (const auto& c : x.when) check_condition(c, where);
    }
  }
  for (const auto& o : g.objects) {
    const std::string where = "object " + o.object_id;
    if (o.names.empty()) invalid(where + ": names must be non-empty");
    for (const auto& n : o.names) {
      if (text::tokenize(n).empty()) invalid(where + ": empty name");
      for (const auto& t : text::tokenize(n)) {
        if (!g.vocabulary.count(t)) invalid(where + ": name word '" + t + "' missing from vocabulary");
      }
    }
    if (o.location != kInventory && o.location != kNowhere && !room_ids.count(o.location) &&
        !object_ids.count(o.location)) {
      invalid(where + ": unknown location " + o.location);
    }
    if (!o.key.empty() && !object_ids.count(o.key)) invalid(where + ": unknown key " + o.key);
    for (const auto& v : o.verb_responses) {
      for (const auto& t : text::tokenize(v.verb)) {
        if (!g.vocabulary.count(t)) invalid(where + ": verb word '" + t + "' missing from vocabulary");
      }
      if (!v.second.empty() && !object_ids.count(v.second)) {
        invalid(where + ": unknown second object " + v.second);
      }
      for (const auto& c : v.when) check_condition(c, where);
      for (const auto& e : v.effects) check_effect(e, where);
    }
  }
  // Containment must be acyclic.
  for (const auto& o : g.objects) {
    std::set<std::string> chain{o.object_id};
    std::string at = o.location;
    while (object_ids.count(at)) {
      if (!chain.insert(at).second) invalid("object " + o.object_id + ": containment cycle");
      at = g.find_object(at)->location;
    }
  }
  for (const auto& p : g.prompts) {
    for (const auto* a : {&p.yes, &p.no}) {
      for (const auto& e : a->effects) check_effect(e, "prompt " + p.id);
    }
  }
  for (const auto& [room, list] : g.flavor_texts) {
    if (!room_ids.count(room)) invalid("flavor text for unknown room " + room);
    for (const auto& f : list) {
      if (f.probability < 0.0 || f.probability > 1.0) invalid("flavor probability out of [0,1] in " + room);
    }
  }
  int total = 0;
  for (const auto& [id, pts] : g.score_events()) total += pts;
  if (total != g.max_score) {
    invalid("max_score " + std::to_string(g.max_score) + " does not equal the sum of score events " +
            std::to_string(total));
  }
}

int line_of(std::string_view text, std::size_t byte) {
  const std::size_t upto = std::min(byte > 0 ? byte - 1 : 0, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
}

}  // namespace

GameSpec load_game(std::string_view spec_text) {
  json doc;
  try {
    doc = json::parse(spec_text.begin(), spec_text.end());
  } catch (const json::parse_error& e) {
    const int line = line_of(spec_text, e.byte);
    throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
  }
  GameSpec g;
  try {
    g = from_json(doc);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed game document: ") + e.what());
  }
  validate(g);
  return g;
}

GameSpec load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open game file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_game(ss.str());
}

}  // namespace nail::engine
