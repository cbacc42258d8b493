#include <algorithm>
#include <optional>
#include <utility>

#include "engine_internal.hpp"
#include "nail/engine.hpp"
#include "nail/rng.hpp"
#include "nail/textutils.hpp"

namespace nail::engine {

namespace detail {

namespace {

struct VerbAlias {
  const char* phrase;
  const char* canonical;
};

// Builtin verb phrases and the action each one maps to. Phrases mapping to
// themselves are recognized but have no builtin effect.
constexpr VerbAlias kVerbAliases[] = {
    {"examine", "examine"}, {"x", "examine"}, {"look at", "examine"},
    {"inspect", "examine"}, {"read", "read"}, {"take", "take"},
    {"get", "take"}, {"pick up", "take"}, {"grab", "take"},
    {"drop", "drop"}, {"put down", "drop"}, {"discard", "drop"},
    {"put", "put"}, {"place", "put"}, {"insert", "put"},
    {"open", "open"}, {"close", "close"}, {"shut", "close"},
    {"lock", "lock"}, {"unlock", "unlock"}, {"turn on", "turn on"},
    {"switch on", "turn on"}, {"light", "turn on"}, {"turn off", "turn off"},
    {"switch off", "turn off"}, {"extinguish", "turn off"},
    {"blow out", "turn off"}, {"eat", "eat"}, {"drink", "drink"},
    {"search", "search"}, {"look in", "search"}, {"look inside", "search"},
    {"wear", "wear"}, {"put on", "wear"},
    {"push", "push"}, {"pull", "pull"}, {"move", "move"}, {"touch", "touch"},
    {"feel", "feel"}, {"smell", "smell"}, {"taste", "taste"},
    {"listen to", "listen to"}, {"hit", "hit"}, {"attack", "attack"},
    {"kill", "kill"}, {"break", "break"}, {"kick", "kick"}, {"climb", "climb"},
    {"throw", "throw"}, {"give", "give"}, {"show", "show"}, {"tie", "tie"},
    {"burn", "burn"}, {"cut", "cut"}, {"dig", "dig"}, {"fill", "fill"},
    {"shake", "shake"}, {"wave", "wave"}, {"knock on", "knock on"},
    {"jump", "jump"}, {"sit on", "sit on"}, {"lie on", "lie on"},
    {"ring", "ring"}, {"rub", "rub"}, {"squeeze", "squeeze"}, {"turn", "turn"},
    {"wind", "wind"}, {"blow", "blow"}, {"ask", "ask"}, {"tell", "tell"},
    {"talk to", "talk to"}, {"sleep", "sleep"}, {"pray", "pray"},
    {"sing", "sing"}, {"yell", "yell"}, {"wake", "wake"}, {"swim", "swim"},
    {"kiss", "kiss"}, {"play", "play"}, {"listen", "listen"},
    {"remove", "remove"}, {"empty", "empty"}, {"pour", "pour"},
};

}  // namespace

const std::vector<std::string>& builtin_verbs() {
  static const std::vector<std::string> verbs = [] {
    std::vector<std::string> out;
    for (const auto& a : kVerbAliases) out.emplace_back(a.phrase);
    return out;
  }();
  return verbs;
}

const std::vector<std::string>& builtin_vocabulary() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> out = {
        "the", "a", "an", "your", "some", "all", "with", "in", "into", "on",
        "onto", "to", "about", "at", "under", "from", "inside", "through",
        "using", "out", "of", "off", "up", "down", "look", "l", "inventory",
        "i", "inv", "restart", "restore", "quit", "q", "save", "score",
        "wait", "z", "go", "walk", "run", "yes", "y", "no",
    };
    for (Direction d : kAllDirections) out.emplace_back(to_string(d));
    for (const char* abbr : {"n", "s", "e", "w", "ne", "nw", "se", "sw", "u", "d"}) {
      out.emplace_back(abbr);
    }
    return out;
  }();
  return words;
}

}  // namespace detail

const std::vector<BuiltinMessage>& builtin_messages() {
  static const std::vector<BuiltinMessage> messages = {
      {"I beg your pardon?", false},
      {"That's not a verb I recognise.", false},
      {"I didn't understand that sentence.", false},
      {"You can't see any such thing.", false},
      {"You can't go that way.", false},
      {"It is pitch black. You are likely to be eaten by a grue.", false},
      {"It's too dark to see.", false},
      {"You already have that.", false},
      {"That's fixed in place.", false},
      {"You're not carrying that.", false},
      {"You aren't holding that.", false},
      {"That's not something you can open.", false},
      {"That's not something you can close.", false},
      {"That's not something you can switch.", false},
      {"That's not something you can lock.", false},
      {"That's not something you can unlock.", false},
      {"That can't contain things.", false},
      {"You can't put something inside itself.", false},
      {"It's already open.", false},
      {"It's already closed.", false},
      {"It's already on.", false},
      {"It's already off.", false},
      {"It's locked.", false},
      {"That doesn't fit the lock.", false},
      {"That's plainly inedible.", false},
      {"You can't drink that.", false},
      {"You can't wear that.", false},
      {"You find nothing of interest.", false},
      {"There is nothing here to take.", false},
      {"You can't use multiple objects with that verb.", false},
      {"That was a rhetorical question.", false},
      {"Saving is not supported here.", false},
      {"Restoring is not supported here.", false},
      {"Please answer RESTART, RESTORE or QUIT.", false},
      {"You are empty-handed.", false},
      {"Taken.", true},
      {"Dropped.", true},
      {"Opened.", true},
      {"Closed.", true},
      {"Done.", true},
      {"Unlocked.", true},
      {"Locked.", true},
      {"Time passes.", true},
      {"Thank you very much. That really hit the spot.", true},
      {"Thanks for playing.", true},
  };
  return messages;
}

namespace {

constexpr std::string_view kPitchBlack =
    "It is pitch black. You are likely to be eaten by a grue.";
constexpr std::string_view kTooDark = "It's too dark to see.";
constexpr std::string_view kNoSuchThing = "You can't see any such thing.";
constexpr std::string_view kNotUnderstood = "I didn't understand that sentence.";
constexpr std::string_view kDeathPrompt = "#death";

bool is_article(std::string_view w) {
  return w == "the" || w == "a" || w == "an" || w == "your" || w == "some";
}

bool is_split_prep(std::string_view w) {
  static constexpr std::string_view kPreps[] = {
      "with", "in", "into", "on", "onto", "to", "about", "at",
      "under", "from", "inside", "through", "using"};
  return std::find(std::begin(kPreps), std::end(kPreps), w) != std::end(kPreps);
}

std::string_view prep_class(std::string_view p) {
  if (p == "into" || p == "inside") return "in";
  if (p == "onto") return "on";
  if (p == "using") return "with";
  return p;
}

bool needs_no_object(std::string_view verb) {
  static constexpr std::string_view kBare[] = {
      "jump", "sleep", "pray", "sing", "yell", "wake", "swim", "listen", "dig"};
  return std::find(std::begin(kBare), std::end(kBare), verb) != std::end(kBare);
}

std::string canonical_verb(const std::string& phrase) {
  for (const auto& a : detail::kVerbAliases) {
    if (phrase == a.phrase) return a.canonical;
  }
  return phrase;
}

std::string with_article(const ObjectSpec& o) {
  return o.article + " " + o.canonical();
}

std::string list_phrase(const std::vector<const ObjectSpec*>& objs) {
  std::string out;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (i > 0) out += (i + 1 == objs.size()) ? " and " : ", ";
    out += with_article(*objs[i]);
  }
  return out;
}

struct Command {
  std::string verb;       // as typed, e.g. "pick up"
  std::string canonical;  // builtin action or the typed phrase
  std::vector<std::string> direct;
  std::string prep;
  std::vector<std::string> indirect;
};

class Interpreter {
 public:
  explicit Interpreter(GameState& s) : s_(s), g_(*s.spec) {}

  std::string run(const std::vector<std::string>& tokens);

  void initialize(std::uint64_t seed) {
    s_.player_room = g_.start_room;
    s_.object_locations.clear();
    s_.object_states.clear();
    for (const auto& o : g_.objects) {
      s_.object_locations[o.object_id] = o.location;
      s_.object_states[o.object_id] = {o.initially_open, o.initially_locked, o.initially_on};
    }
    s_.flags = g_.initial_flags;
    s_.score = 0;
    s_.rng.seed(seed);
    s_.visited.clear();
    s_.fired_events.clear();
    s_.handled.clear();
    s_.pending_prompt.reset();
    s_.finished = false;
  }

  std::string look() { return lit() ? describe_room() : std::string(kPitchBlack); }

  void note_arrival() {
    if (lit() && s_.visited.insert(s_.player_room).second) {
      fire("visit:" + s_.player_room);
    }
  }

  bool lit() const {
    if (!room().is_dark) return true;
    for (const auto& o : g_.objects) {
      if (o.light_source && s_.object_states.at(o.object_id).on &&
          (held(o.object_id) || in_room(o.object_id))) {
        return true;
      }
    }
    return false;
  }

 private:
  const RoomSpec& room() const { return *g_.find_room(s_.player_room); }
  const ObjectSpec& obj(const std::string& id) const { return *g_.find_object(id); }
  const std::string& where(const std::string& id) const { return s_.object_locations.at(id); }
  ObjectState& state(const std::string& id) { return s_.object_states.at(id); }

  bool container_open(const ObjectSpec& o) const {
    return !(o.attributes & kOpenable) || s_.object_states.at(o.object_id).open;
  }

  // Follows containment up to the first non-object place.
  std::string outermost_place(const std::string& id) const {
    std::string at = where(id);
    while (g_.find_object(at)) at = where(at);
    return at;
  }

  bool held(const std::string& id) const { return outermost_place(id) == kInventory; }
  bool in_room(const std::string& id) const { return outermost_place(id) == s_.player_room; }

  bool reachable(const std::string& id) const {
    const std::string& at = where(id);
    if (at == kInventory || at == s_.player_room) return true;
    const ObjectSpec* c = g_.find_object(at);
    if (!c || !container_open(*c)) return false;
    return reachable(c->object_id);
  }

  std::vector<const ObjectSpec*> contents(const std::string& id) const {
    std::vector<const ObjectSpec*> out;
    for (const auto& o : g_.objects) {
      if (where(o.object_id) == id) out.push_back(&o);
    }
    return out;
  }

  void fire(const std::string& event) {
    const auto events = g_.score_events();
    auto it = events.find(event);
    if (it != events.end() && s_.fired_events.insert(event).second) {
      s_.score += it->second;
    }
  }

  std::string describe_room() {
    const RoomSpec& r = room();
    std::string out = r.name + "\n" + r.description;
    for (const auto& o : g_.objects) {
      if (where(o.object_id) != r.room_id) continue;
      if (o.listed || s_.handled.count(o.object_id)) {
        out += "\nThere is " + with_article(o) + " here.";
      }
    }
    for (const auto& o : g_.objects) {
      if (where(o.object_id) != r.room_id || !o.container || !container_open(o)) continue;
      const auto inside = contents(o.object_id);
      if (!inside.empty()) out += "\nThe " + o.canonical() + " contains " + list_phrase(inside) + ".";
    }
    if (auto it = g_.flavor_texts.find(r.room_id); it != g_.flavor_texts.end()) {
      for (const auto& f : it->second) {
        if (rng::unit(s_.rng) < f.probability) out += "\n" + f.text;
      }
    }
    return out;
  }

  bool holds(const Condition& c) const {
    switch (c.kind) {
      case Condition::Kind::kFlag: return s_.flags.count(c.subject) > 0;
      case Condition::Kind::kNotFlag: return s_.flags.count(c.subject) == 0;
      case Condition::Kind::kState: {
        const ObjectState& st = s_.object_states.at(c.subject);
        const bool v = c.key == "open" ? st.open : c.key == "locked" ? st.locked : st.on;
        return v == c.value;
      }
      case Condition::Kind::kHolding: return where(c.subject) == kInventory;
      case Condition::Kind::kNotHolding: return where(c.subject) != kInventory;
      case Condition::Kind::kAt: return s_.player_room == c.subject;
    }
    return false;
  }

  bool all_hold(const std::vector<Condition>& cs) const {
    return std::all_of(cs.begin(), cs.end(), [&](const Condition& c) { return holds(c); });
  }

  std::string die() {
    s_.pending_prompt = std::string(kDeathPrompt);
    return "\n\n*** You have died ***\n\n" + std::string(kRestartPrompt);
  }

  std::string apply(const std::vector<Effect>& effects) {
    std::string extra;
    for (const auto& e : effects) {
      switch (e.kind) {
        case Effect::Kind::kSetFlag: s_.flags.insert(e.subject); break;
        case Effect::Kind::kClearFlag: s_.flags.erase(e.subject); break;
        case Effect::Kind::kSetState: {
          ObjectState& st = state(e.subject);
          (e.key == "open" ? st.open : e.key == "locked" ? st.locked : st.on) = e.value;
          break;
        }
        case Effect::Kind::kMove:
          s_.object_locations[e.subject] = e.key;
          if (e.key == kInventory) s_.handled.insert(e.subject);
          break;
        case Effect::Kind::kPrompt: {
          const PromptSpec* p = g_.find_prompt(e.subject);
          s_.pending_prompt = p->id;
          extra += "\n" + p->text;
          break;
        }
        case Effect::Kind::kDie: extra += die(); break;
        case Effect::Kind::kFinish: s_.finished = true; break;
      }
    }
    return extra;
  }

  std::string restart() {
    ++s_.restarts;
    initialize(s_.seed + static_cast<std::uint64_t>(s_.restarts));
    return look();
  }

  std::string answer_prompt(const PromptSpec& p, bool yes) {
    const PromptAnswer& a = yes ? p.yes : p.no;
    s_.pending_prompt.reset();
    if (a.score > 0) fire("prompt:" + p.id + (yes ? ":yes" : ":no"));
    std::string out = a.response;
    out += apply(a.effects);
    return text::trim(out);
  }

  std::string restart_prompt_input(const std::vector<std::string>& t) {
    if (t.size() == 1 && t[0] == "restart") return restart();
    if (t.size() == 1 && (t[0] == "quit" || t[0] == "q")) {
      s_.finished = true;
      s_.pending_prompt.reset();
      return "Thanks for playing.";
    }
    if (t.size() == 1 && t[0] == "restore") {
      return "Restoring is not supported here.\n" + std::string(kRestartPrompt);
    }
    return "Please answer RESTART, RESTORE or QUIT.\n" + std::string(kRestartPrompt);
  }

  std::string inventory() {
    std::vector<const ObjectSpec*> items = contents(std::string(kInventory));
    if (items.empty()) return "You are empty-handed.";
    std::string out = "You are carrying:";
    for (const auto* o : items) out += "\n  " + with_article(*o);
    return out;
  }

  std::string move(Direction d) {
    const RoomSpec& r = room();
    if (!lit()) {
      if (r.grue) {
        return "Oh, no! You have walked into the slavering fangs of a lurking grue!" + die();
      }
      return std::string(kPitchBlack);
    }
    auto it = r.exits.find(d);
    if (it == r.exits.end()) return "You can't go that way.";
    const ExitSpec& x = it->second;
    if (x.to.empty() || !all_hold(x.when)) {
      return x.blocked.empty() ? "You can't go that way." : x.blocked;
    }
    s_.player_room = x.to;
    return look();
  }

  std::string take_all() {
    if (!g_.supports_take_all) return std::string(kNoSuchThing);
    if (!lit()) return std::string(kTooDark);
    std::vector<const ObjectSpec*> targets;
    for (const auto& o : g_.objects) {
      if (o.portable && where(o.object_id) == s_.player_room) targets.push_back(&o);
    }
    if (targets.empty()) return "There is nothing here to take.";
    if (targets.size() == 1) return act("take", "take", *targets[0], nullptr, "");
    std::string out;
    for (const auto* o : targets) {
      if (!out.empty()) out += "\n";
      const std::string label = o->article == "your" ? "your " + o->canonical() : o->canonical();
      out += label + ": " + act("take", "take", *o, nullptr, "");
    }
    return out;
  }

  // Resolves a noun phrase against objects the player can currently reach.
  const ObjectSpec* resolve(std::vector<std::string> words, bool dark, bool allow_switch) const {
    words.erase(std::remove_if(words.begin(), words.end(), [](const std::string& w) { return is_article(w); }),
                words.end());
    if (words.empty()) return nullptr;
    const std::string phrase = text::join(words);
    const ObjectSpec* best = nullptr;
    for (const auto& o : g_.objects) {
      bool visible = dark ? (held(o.object_id) ||
                             (allow_switch && (o.attributes & kSwitchable) && where(o.object_id) == s_.player_room))
                          : reachable(o.object_id);
      if (!visible) continue;
      std::set<std::string> name_words;
      bool exact = false;
      for (const auto& n : o.names) {
        for (auto& t : text::tokenize(n)) name_words.insert(t);
        if (text::join(text::tokenize(n)) == phrase) exact = true;
      }
      const bool covers = std::all_of(words.begin(), words.end(),
                                      [&](const std::string& w) { return name_words.count(w) > 0; });
      if (!covers) continue;
      if (exact) return &o;
      if (!best) best = &o;
    }
    return best;
  }

  std::string canned_failure() {
    const auto& c = g_.canned_failures;
    if (c.empty()) return "Nothing happens.";
    return c[rng::below(s_.rng, c.size())];
  }

  std::string act(const std::string& verb, const std::string& canon, const ObjectSpec& o,
                  const ObjectSpec* second, const std::string& prep) {
    for (std::size_t i = 0; i < o.verb_responses.size(); ++i) {
      const VerbResponse& vr = o.verb_responses[i];
      if (canonical_verb(vr.verb) != canon) continue;
      if (vr.prep.empty() != prep.empty()) continue;
      if (!vr.prep.empty() &&
          (prep_class(vr.prep) != prep_class(prep) || !second || second->object_id != vr.second)) {
        continue;
      }
      if (all_hold(vr.when)) {
        if (vr.score > 0) fire("verb:" + o.object_id + ":" + std::to_string(i));
        std::string out = vr.response + apply(vr.effects);
        return out;
      }
      if (!vr.else_response.empty()) return vr.else_response;
    }
    return builtin(verb, canon, o, second, prep);
  }

  std::string builtin(const std::string& verb, const std::string& canon, const ObjectSpec& o,
                      const ObjectSpec* second, const std::string& prep) {
    const std::string& id = o.object_id;
    ObjectState& st = state(id);
    const std::string the = "The " + o.canonical();
    if (canon == "examine") {
      std::string out = o.examine_text.empty()
                            ? "You see nothing special about the " + o.canonical() + "."
                            : o.examine_text;
      if (o.container && container_open(o)) {
        const auto inside = contents(id);
        if (!inside.empty()) out += " " + the + " contains " + list_phrase(inside) + ".";
      }
      return out;
    }
    if (canon == "read") return "There's nothing written on the " + o.canonical() + ".";
    if (canon == "take") {
      if (where(id) == kInventory) return "You already have that.";
      if (!o.portable) return "That's fixed in place.";
      s_.object_locations[id] = std::string(kInventory);
      s_.handled.insert(id);
      fire("take:" + id);
      return "Taken.";
    }
    if (canon == "drop") {
      if (where(id) != kInventory) return "You're not carrying that.";
      s_.object_locations[id] = s_.player_room;
      return "Dropped.";
    }
    if (canon == "put") {
      if (!second || prep_class(prep) != "in") return canned_failure();
      if (where(id) != kInventory) return "You aren't holding that.";
      if (second == &o) return "You can't put something inside itself.";
      if (!second->container) return "That can't contain things.";
      if (!container_open(*second)) return "The " + second->canonical() + " is closed.";
      s_.object_locations[id] = second->object_id;
      return "Done.";
    }
    if (canon == "open") {
      if (!(o.attributes & kOpenable)) return "That's not something you can open.";
      if (st.open) return "It's already open.";
      if (st.locked) return "It's locked.";
      st.open = true;
      const auto inside = contents(id);
      if (o.container && !inside.empty()) {
        return "Opening the " + o.canonical() + " reveals " + list_phrase(inside) + ".";
      }
      return "Opened.";
    }
    if (canon == "close") {
      if (!(o.attributes & kOpenable)) return "That's not something you can close.";
      if (!st.open) return "It's already closed.";
      st.open = false;
      return "Closed.";
    }
    if (canon == "lock" || canon == "unlock") {
      if (!(o.attributes & kLockable)) return "That's not something you can " + canon + ".";
      if (!second || prep_class(prep) != "with") {
        return "What do you want to " + canon + " the " + o.canonical() + " with?";
      }
      if (where(second->object_id) != kInventory) return "You aren't holding that.";
      if (second->object_id != o.key) return "That doesn't fit the lock.";
      if (canon == "unlock") {
        if (!st.locked) return "It's already unlocked.";
        st.locked = false;
        return "Unlocked.";
      }
      if (st.locked) return "It's already locked.";
      if (st.open) return the + " is open.";
      st.locked = true;
      return "Locked.";
    }
    if (canon == "turn on" || canon == "turn off") {
      if (!(o.attributes & kSwitchable)) return "That's not something you can switch.";
      const bool on = canon == "turn on";
      if (st.on == on) return on ? "It's already on." : "It's already off.";
      st.on = on;
      return the + " is now " + (on ? "on." : "off.");
    }
    if (canon == "eat" || canon == "drink") {
      if (!(o.attributes & kConsumable)) {
        return canon == "eat" ? "That's plainly inedible." : "You can't drink that.";
      }
      s_.object_locations[id] = std::string(kNowhere);
      return "Thank you very much. That really hit the spot.";
    }
    if (canon == "search") {
      if (o.container && container_open(o)) {
        const auto inside = contents(id);
        if (!inside.empty()) return "Inside the " + o.canonical() + " you find " + list_phrase(inside) + ".";
      }
      return "You find nothing of interest.";
    }
    if (canon == "wear") return "You can't wear that.";
    (void)verb;
    return canned_failure();
  }

  std::string command(const std::vector<std::string>& tokens);

  GameState& s_;
  const GameSpec& g_;
};

std::string Interpreter::run(const std::vector<std::string>& t) {
  if (t.empty()) return "I beg your pardon?";
  for (const auto& w : t) {
    if (!g_.vocabulary.count(w)) return "I don't know the word " + w + ".";
  }
  if (s_.pending_prompt) {
    const std::string id = *s_.pending_prompt;
    const PromptSpec* p = g_.find_prompt(id);
    if (id == kDeathPrompt || (p && p->kind == PromptSpec::Kind::kRestart)) {
      return restart_prompt_input(t);
    }
    if (t.size() == 1 && (t[0] == "yes" || t[0] == "y")) return answer_prompt(*p, true);
    if (t.size() == 1 && t[0] == "no") return answer_prompt(*p, false);
    s_.pending_prompt.reset();
  }

  if (t.size() == 1) {
    const std::string& w = t[0];
    if (w == "look" || w == "l") return look();
    if (w == "inventory" || w == "i" || w == "inv") return inventory();
    if (w == "yes" || w == "y" || w == "no") return "That was a rhetorical question.";
    if (w == "restart") return restart();
    if (w == "restore") return "Restoring is not supported here.";
    if (w == "save") return "Saving is not supported here.";
    if (w == "quit" || w == "q") {
      s_.finished = true;
      return "Thanks for playing.";
    }
    if (w == "score") {
      return "Your score is " + std::to_string(s_.score) + " of a possible " +
             std::to_string(g_.max_score) + ", in " + std::to_string(s_.moves) + " moves.";
    }
    if (w == "wait" || w == "z") return "Time passes.";
    if (auto d = parse_direction(w)) return move(*d);
  }
  if (t.size() == 2 && (t[0] == "go" || t[0] == "walk" || t[0] == "run")) {
    if (auto d = parse_direction(t[1])) return move(*d);
    return "You can't go that way.";
  }
  if (t.size() == 2 && (t[0] == "take" || t[0] == "get") && t[1] == "all") return take_all();
  return command(t);
}

std::string Interpreter::command(const std::vector<std::string>& t) {
  // Longest verb phrase at the start of the input.
  std::string verb;
  std::size_t verb_len = 0;
  auto consider = [&](const std::string& phrase) {
    const auto words = text::tokenize(phrase);
    if (words.size() <= verb_len || words.size() > t.size()) return;
    if (std::equal(words.begin(), words.end(), t.begin())) {
      verb = text::join(words);
      verb_len = words.size();
    }
  };
  for (const auto& v : detail::builtin_verbs()) consider(v);
  for (const auto& o : g_.objects) {
    for (const auto& vr : o.verb_responses) consider(vr.verb);
  }
  if (verb_len == 0) {
    if (t[0] == "go" || t[0] == "walk" || t[0] == "run") return "You can't go that way.";
    return "That's not a verb I recognise.";
  }

  Command c;
  c.verb = verb;
  c.canonical = canonical_verb(verb);
  std::size_t i = verb_len;
  for (; i < t.size() && !is_split_prep(t[i]); ++i) c.direct.push_back(t[i]);
  if (i < t.size()) {
    c.prep = t[i];
    c.indirect.assign(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
  }
  if (c.direct.empty() && c.prep.empty()) {
    if (needs_no_object(c.canonical)) return canned_failure();
    return "What do you want to " + c.verb + "?";
  }
  if (c.direct.empty() || (!c.prep.empty() && c.indirect.empty())) return std::string(kNotUnderstood);
  if (std::find(c.indirect.begin(), c.indirect.end(), std::string("all")) != c.indirect.end()) {
    return std::string(kNotUnderstood);
  }
  if (c.direct.size() == 1 && c.direct[0] == "all") {
    if (c.canonical == "take" && c.prep.empty()) return take_all();
    return "You can't use multiple objects with that verb.";
  }

  const bool dark = !lit();
  if (dark && (c.canonical == "examine" || c.canonical == "read" || c.canonical == "search" ||
               c.canonical == "take")) {
    return std::string(kTooDark);
  }
  const bool allow_switch = c.canonical == "turn on";
  const ObjectSpec* direct = resolve(c.direct, dark, allow_switch);
  if (!direct) return std::string(dark ? kTooDark : kNoSuchThing);
  const ObjectSpec* second = nullptr;
  if (!c.prep.empty()) {
    second = resolve(c.indirect, dark, false);
    if (!second) return std::string(dark ? kTooDark : kNoSuchThing);
  }
  std::string out = act(c.verb, c.canonical, *direct, second, c.prep);
  if (dark && lit()) out += "\n\n" + describe_room();
  return out;
}

}  // namespace

std::pair<GameState, Observation> reset(std::shared_ptr<const GameSpec> spec, std::uint64_t seed) {
  GameState s;
  s.spec = std::move(spec);
  s.seed = seed;
  s.moves = 0;
  s.restarts = 0;
  Interpreter in(s);
  in.initialize(seed);
  Observation obs{in.look(), 0, 0};
  return {std::move(s), std::move(obs)};
}

Observation step(GameState& state, std::string_view action) {
  if (state.finished) return {"The game is over.", 0, state.moves};
  Interpreter in(state);
  const int before = state.score;
  ++state.moves;
  // The room the player stands in counts as visited once it is lit, even if
  // this step leaves it again.
  if (!state.pending_prompt) in.note_arrival();
  std::string text = in.run(text::tokenize(action));
  if (!state.pending_prompt) in.note_arrival();
  return {std::move(text), state.score - before, state.moves};
}

GroundTruth introspect(const GameState& state) {
  GroundTruth gt;
  gt.player_room = state.player_room;
  for (const auto& [id, place] : state.object_locations) {
    if (place == kInventory) gt.inventory.push_back(id);
  }
  std::sort(gt.inventory.begin(), gt.inventory.end());
  gt.object_places = state.object_locations;
  gt.visited = state.visited;
  gt.score = state.score;
  return gt;
}

}  // namespace nail::engine
