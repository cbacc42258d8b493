#include <algorithm>
#include <cstdlib>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "nail/harness.hpp"

namespace nail::harness {

namespace {

std::map<std::string, std::string> fields(const std::string& line) {
  // key=value pairs; values may be double-quoted with backslash escapes.
  std::map<std::string, std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const auto eq = line.find('=', i);
    if (eq == std::string::npos) break;
    const std::string key = line.substr(i, eq - i);
    std::string value;
    i = eq + 1;
    if (i < line.size() && line[i] == '"') {
      ++i;
      while (i < line.size() && line[i] != '"') {
        if (line[i] == '\\' && i + 1 < line.size()) ++i;
        value += line[i++];
      }
      ++i;
    } else {
      while (i < line.size() && line[i] != ' ') value += line[i++];
    }
    out[key] = value;
  }
  return out;
}

int to_int(const std::string& s) { return static_cast<int>(std::strtol(s.c_str(), nullptr, 10)); }

}  // namespace

ReplayReport validate_transcript(std::string_view transcript) {
  ReplayReport r;
  std::istringstream in{std::string(transcript)};
  std::string line;
  std::string granted;
  int lineno = 0;
  bool header = false;
  auto fail = [&](const std::string& msg) { r.errors.push_back("line " + std::to_string(lineno) + ": " + msg); };

  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("  |", 0) == 0) continue;
    if (line.rfind("# game=", 0) == 0) {
      auto f = fields(line.substr(2));
      r.budget = to_int(f["budget"]);
      header = true;
      continue;
    }
    if (line.rfind("# end", 0) == 0) continue;
    if (line.rfind("@grant ", 0) == 0) {
      auto f = fields(line.substr(7));
      ++r.grants;
      if (to_int(f["step"]) != r.steps) fail("grant annotated at step " + f["step"] + ", expected " + std::to_string(r.steps));
      std::string best;
      double best_value = -1.0;
      std::stringstream list(f["eager"]);
      std::string item;
      while (std::getline(list, item, ',')) {
        const auto colon = item.rfind(':');
        if (colon == std::string::npos) {
          fail("malformed eagerness entry '" + item + "'");
          continue;
        }
        const double v = std::strtod(item.c_str() + colon + 1, nullptr);
        if (v < 0.0 || v >= 1.0) fail("eagerness outside [0,1): " + item);
        if (v > best_value) {
          best_value = v;
          best = item.substr(0, colon);
        }
      }
      granted = f["module"];
      if (best_value <= 0.0) fail("control granted with no eager module");
      if (granted != best) fail("granted " + granted + " but " + best + " was most eager");
      continue;
    }
    if (line.rfind("step=", 0) == 0) {
      auto f = fields(line);
      ++r.steps;
      if (to_int(f["step"]) != r.steps) fail("step " + f["step"] + " out of sequence");
      if (f["module"] != granted && f["module"] != "Random") {
        fail("step by " + f["module"] + " during a grant to " + granted);
      }
      continue;
    }
    if (line.rfind("blocked ", 0) == 0) {
      fail("blocked action emitted: " + line.substr(8));
      continue;
    }
    if (!line.empty()) fail("unrecognized line");
  }
  if (!header) r.errors.push_back("missing header");
  if (r.steps > r.budget) r.errors.push_back("steps " + std::to_string(r.steps) + " exceed budget " + std::to_string(r.budget));
  return r;
}

MappingReport check_mapping(std::shared_ptr<const engine::GameSpec> spec, std::uint64_t seed,
                            const agent::Resources& res, const agent::AgentConfig& config) {
  std::set<MapEdge> truth;
  // Which ground-truth rooms each KG location was seen standing in.
  std::map<int, std::set<std::string>> seen_as;
  std::string room;
  bool trusted = true;  // the last observation showed a lit room
  int last_grant = 0;
  {
    auto [state, obs] = engine::reset(spec, seed);
    room = state.player_room;
    trusted = !agent::is_dark_text(obs.text);
  }
  auto observer = [&](const agent::AgentContext& ctx, const engine::GameState& state, const agent::StepEvent& ev) {
    // Modules settle the current location by the end of their grant, so the
    // KG is compared with the world only as a new grant starts.
    if (ev.grant != last_grant && trusted) seen_as[ctx.kg.current_location()].insert(room);
    last_grant = ev.grant;
    const std::string now = state.player_room;
    if (now != room) {
      if (auto d = parse_direction(text::trim(ev.action))) truth.insert({room, *d, now});
    }
    room = now;
    trusted = !agent::is_dark_text(ev.observation.text) && !agent::is_restart_prompt(ev.observation.text);
  };
  const agent::EpisodeResult r = agent::run_episode(spec, seed, res, config, observer);
  if (trusted) seen_as[r.kg.current_location()].insert(room);

  MappingReport m;
  m.steps = r.steps;
  m.truth.assign(truth.begin(), truth.end());
  m.locations = static_cast<int>(r.kg.locations().size());
  std::map<std::string, int> per_room;
  for (const auto& loc : r.kg.locations()) {
    const auto& rooms = seen_as[loc.location_id];
    if (rooms.empty()) {
      ++m.unmatched_locations;
    } else if (rooms.size() > 1) {
      ++m.ambiguous_locations;
    } else {
      ++per_room[*rooms.begin()];
    }
  }
  for (const auto& [name, n] : per_room) m.duplicate_locations += n - 1;
  std::set<MapEdge> recovered;
  auto name_of = [&](int id) {
    const auto& rooms = seen_as[id];
    return rooms.size() == 1 ? *rooms.begin() : "?" + std::to_string(id);
  };
  for (const auto& c : r.kg.connections()) recovered.insert({name_of(c.from), c.direction, name_of(c.to)});
  m.recovered.assign(recovered.begin(), recovered.end());
  return m;
}

}  // namespace nail::harness
