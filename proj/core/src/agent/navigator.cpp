#include "nail/agent/modules.hpp"

#include <limits>

namespace nail::agent {

namespace {

// Valid records of actions that could have changed the room: anything but
// movement, looking around and examining.
int interaction_count(const kg::Location& loc) {
  int n = 0;
  for (const auto& r : loc.action_records) {
    if (!validity::is_valid(r.p_valid)) continue;
    const auto toks = text::tokenize(r.action);
    if (toks.empty()) continue;
    if (toks.size() == 1 && (parse_direction(toks[0]) || toks[0] == "look" || toks[0] == "inventory")) continue;
    if (toks[0] == "examine") continue;
    ++n;
  }
  return n;
}

void set_nav(kg::KnowledgeGraph& kg, int from, Direction d, kg::NavStatus status, int to) {
  kg::NavAttempt& a = kg.location(from).navigation[d];
  a.status = status;
  a.to = to;
}

}  // namespace

double Navigator::eagerness(const AgentContext& ctx) const {
  return ctx.kg.has_location(ctx.current()) ? eagerness_ : 0.0;
}

Direction Navigator::choose_direction(const AgentContext& ctx) {
  const kg::Location& here = ctx.kg.location(ctx.current());
  const int interactions = interaction_count(here);
  auto open = [&](Direction d) {
    const kg::NavAttempt a = here.navigation_for(d);
    return a.status == kg::NavStatus::kUntried ||
           (a.status == kg::NavStatus::kFailed && interactions > a.valid_records);
  };
  for (const auto& w : text::tokenize(here.description)) {
    if (auto d = direction_mentioned_by(w); d && open(*d)) return *d;
  }
  for (Direction d : kAllDirections) {
    if (open(d)) return d;
  }
  for (auto wanted : {kg::NavStatus::kSucceeded, kg::NavStatus::kFailed}) {
    std::optional<Direction> best;
    int fewest = std::numeric_limits<int>::max();
    for (Direction d : kAllDirections) {
      const kg::NavAttempt a = here.navigation_for(d);
      if (a.status == wanted && a.attempts < fewest) {
        best = d;
        fewest = a.attempts;
      }
    }
    if (best) return *best;
  }
  return Direction::kNorth;
}

ActionIterator Navigator::take_control(AgentContext& ctx) {
  const int from = ctx.current();
  const Direction d = choose_direction(ctx);
  const std::string previous = ctx.kg.location(from).description;
  {
    kg::NavAttempt& a = ctx.kg.location(from).navigation[d];
    ++a.attempts;
    a.valid_records = interaction_count(ctx.kg.location(from));
  }
  const std::string action(to_string(d));
  if (ctx.kg.is_blocked(action)) {
    set_nav(ctx.kg, from, d, kg::NavStatus::kFailed, -1);
    co_return;
  }

  Feedback fb = co_yield action;
  const std::string& text = fb.observation.text;
  if (is_restart_prompt(text)) {
    set_nav(ctx.kg, from, d, kg::NavStatus::kFailed, -1);
    co_return;
  }
  if (is_dark_text(text)) {
    // Darkness resolves the destination once there is light.
    set_nav(ctx.kg, from, d, kg::NavStatus::kFailed, -1);
    ctx.dark_arrival = DarkArrival{from, d};
    co_return;
  }
  if (!validity::is_valid(fb.p_valid)) {
    set_nav(ctx.kg, from, d, kg::NavStatus::kFailed, -1);
    co_return;
  }
  if (auto match = ctx.kg.find_location(text)) {
    if (match->first == from) {
      set_nav(ctx.kg, from, d, kg::NavStatus::kFailed, -1);
    } else {
      ctx.kg.connect(from, d, match->first);
      ctx.enter_location(match->first, text);
      set_nav(ctx.kg, from, d, kg::NavStatus::kSucceeded, match->first);
    }
    co_return;
  }

  Feedback look = co_yield std::string("look");
  const std::string& desc = look.observation.text;
  if (is_restart_prompt(desc) || text::trim(desc).empty()) co_return;
  if (is_dark_text(desc)) {
    set_nav(ctx.kg, from, d, kg::NavStatus::kFailed, -1);
    ctx.dark_arrival = DarkArrival{from, d};
    co_return;
  }
  if (text::fuzzy_ratio(desc, previous) >= kg::kSameLocationThreshold) {
    set_nav(ctx.kg, from, d, kg::NavStatus::kFailed, -1);
    co_return;
  }
  const auto match = ctx.kg.find_location(desc);
  const int to = match ? match->first : ctx.add_location_from(desc);
  ctx.kg.connect(from, d, to);
  ctx.enter_location(to, desc);
  set_nav(ctx.kg, from, d, kg::NavStatus::kSucceeded, to);
}

}  // namespace nail::agent
