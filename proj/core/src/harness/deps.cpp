#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nail/harness.hpp"

namespace nail::harness {

using nlohmann::json;

namespace {

std::string normalized_name(std::string_view s) {
  auto toks = text::tokenize(s);
  std::erase_if(toks, [](const std::string& w) { return w == "the" || w == "a" || w == "an"; });
  return text::join(toks);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool entity_present(const kg::KnowledgeGraph& kg, const std::vector<std::string>& accepted) {
  if (!kg.has_location(kg.current_location())) return false;
  for (int id : kg.location(kg.current_location()).entities) {
    for (const auto& n : kg.entity(id).names) {
      const std::string have = normalized_name(n);
      for (const auto& want : accepted) {
        if (have == normalized_name(want)) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(DepKind kind) {
  switch (kind) {
    case DepKind::kEnt: return "EntDep";
    case DepKind::kAct: return "ActDep";
    case DepKind::kLoc: return "LocDep";
    case DepKind::kInv: return "InvDep";
  }
  return "?";
}

std::string Dependency::describe() const {
  std::string out(to_string(kind));
  switch (kind) {
    case DepKind::kEnt: {
      out += "([";
      for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", '" : "'") + names[i] + "'";
      out += "], loc=" + room + ")";
      break;
    }
    case DepKind::kAct: out += "('" + action + "', '" + response + "')"; break;
    case DepKind::kLoc: out += "(" + room + ")"; break;
    case DepKind::kInv: out += "(" + object + ")"; break;
  }
  return out;
}

std::vector<Dependency> parse_dependencies(std::string_view document, const engine::GameSpec& game) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("dependency file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dependencies") || !doc.at("dependencies").is_array()) {
    throw ConfigError("dependency file: expected an object with a 'dependencies' array");
  }
  if (doc.contains("game") && doc.at("game").get<std::string>() != game.game_id) {
    throw ConfigError("dependency file is for game '" + doc.at("game").get<std::string>() + "', not '" +
                      game.game_id + "'");
  }
  std::vector<Dependency> deps;
  int index = 0;
  for (const auto& d : doc.at("dependencies")) {
    const std::string where = "dependency " + std::to_string(index++) + ": ";
    try {
      Dependency dep;
      const std::string kind = d.at("kind").get<std::string>();
      auto room = [&] {
        std::string r = d.at("loc").get<std::string>();
        if (!game.find_room(r)) throw ConfigError(where + "unknown room '" + r + "'");
        return r;
      };
      if (kind == "EntDep") {
        dep.kind = DepKind::kEnt;
        dep.names = d.at("names").get<std::vector<std::string>>();
        if (dep.names.empty()) throw ConfigError(where + "EntDep needs at least one name");
        dep.room = room();
      } else if (kind == "ActDep") {
        dep.kind = DepKind::kAct;
        dep.action = d.value("action", "");
        dep.response = d.at("response").get<std::string>();
        if (text::trim(dep.response).empty()) throw ConfigError(where + "ActDep needs a response");
      } else if (kind == "LocDep") {
        dep.kind = DepKind::kLoc;
        dep.room = room();
      } else if (kind == "InvDep") {
        dep.kind = DepKind::kInv;
        dep.object = d.at("object").get<std::string>();
        if (!game.find_object(dep.object)) throw ConfigError(where + "unknown object '" + dep.object + "'");
      } else {
        throw ConfigError(where + "unknown kind '" + kind + "'");
      }
      deps.push_back(std::move(dep));
    } catch (const json::exception& e) {
      throw ConfigError(where + e.what());
    }
  }
  return deps;
}

std::vector<Dependency> load_dependencies(const std::string& path, const engine::GameSpec& game) {
  return parse_dependencies(read_file(path), game);
}

DependencyTracker::DependencyTracker(std::vector<Dependency> deps)
    : deps_(std::move(deps)), satisfied_(deps_.size(), false) {}

void DependencyTracker::observe(const kg::KnowledgeGraph& kg, const engine::GroundTruth& truth,
                                std::string_view observation) {
  for (std::size_t i = 0; i < deps_.size(); ++i) {
    if (satisfied_[i]) continue;
    const Dependency& d = deps_[i];
    switch (d.kind) {
      case DepKind::kEnt: satisfied_[i] = truth.player_room == d.room && entity_present(kg, d.names); break;
      case DepKind::kAct: satisfied_[i] = text::contains_ci(observation, d.response); break;
      case DepKind::kLoc: satisfied_[i] = truth.player_room == d.room; break;
      case DepKind::kInv:
        satisfied_[i] = std::find(truth.inventory.begin(), truth.inventory.end(), d.object) != truth.inventory.end();
        break;
    }
  }
}

int DependencyTracker::satisfied_count() const {
  return static_cast<int>(std::count(satisfied_.begin(), satisfied_.end(), true));
}

int DependencyTracker::satisfied_count(DepKind kind) const {
  int n = 0;
  for (std::size_t i = 0; i < deps_.size(); ++i) n += deps_[i].kind == kind && satisfied_[i];
  return n;
}

int DependencyTracker::total(DepKind kind) const {
  return static_cast<int>(
      std::count_if(deps_.begin(), deps_.end(), [&](const Dependency& d) { return d.kind == kind; }));
}

std::vector<bool> check_dependencies(const std::vector<Dependency>& deps, const std::vector<DepEvent>& events) {
  DependencyTracker tracker(deps);
  static const kg::KnowledgeGraph kEmpty;
  for (const auto& e : events) tracker.observe(e.kg ? *e.kg : kEmpty, e.truth, e.observation);
  return tracker.satisfied();
}

}  // namespace nail::harness
