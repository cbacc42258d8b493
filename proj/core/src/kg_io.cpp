#include <sstream>

#include "json.hpp"
#include "nail/kg.hpp"

namespace nail::kg {

using nlohmann::json;

namespace {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::kTrue: return "true";
    case Tri::kFalse: return "false";
    case Tri::kUnknown: break;
  }
  return "unknown";
}

Tri parse_tri(const std::string& s) {
  if (s == "true") return Tri::kTrue;
  if (s == "false") return Tri::kFalse;
  if (s == "unknown") return Tri::kUnknown;
  throw KgError("bad tri-state value: " + s);
}

const char* nav_name(NavStatus s) {
  switch (s) {
    case NavStatus::kFailed: return "failed";
    case NavStatus::kSucceeded: return "succeeded";
    case NavStatus::kUntried: break;
  }
  return "untried";
}

NavStatus parse_nav(const std::string& s) {
  if (s == "failed") return NavStatus::kFailed;
  if (s == "succeeded") return NavStatus::kSucceeded;
  if (s == "untried") return NavStatus::kUntried;
  throw KgError("bad navigation status: " + s);
}

Direction parse_dir(const std::string& s) {
  auto d = parse_direction(s);
  if (!d) throw KgError("bad direction: " + s);
  return *d;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const KnowledgeGraph& kg) {
  std::ostringstream out;
  out << "digraph kg {\n";
  for (const auto& loc : kg.locations()) {
    out << "  L" << loc.location_id << " [shape=ellipse, label=\"" << dot_escape(loc.name) << "\""
        << (loc.location_id == kg.current_location() ? ", peripheries=2" : "") << "];\n";
  }
  for (const auto& c : kg.connections()) {
    out << "  L" << c.from << " -> L" << c.to << " [label=\"" << to_string(c.direction) << "\"];\n";
  }
  out << "  inventory [shape=folder, label=\"inventory\"];\n";
  for (const auto& e : kg.entities()) {
    if (e.place == kNowhere) continue;
    out << "  E" << e.entity_id << " [shape=box, label=\"" << dot_escape(e.name()) << "\"];\n";
    if (e.place == kInventory) {
      out << "  inventory -> E" << e.entity_id << " [style=dashed];\n";
    } else {
      out << "  L" << e.place << " -> E" << e.entity_id << " [style=dashed];\n";
    }
    for (int c : e.contained) out << "  E" << e.entity_id << " -> E" << c << " [style=dotted];\n";
  }
  if (!kg.unrecognized_words().empty()) {
    out << "  unrecognized [shape=note, label=\"";
    bool first = true;
    for (const auto& w : kg.unrecognized_words()) {
      out << (first ? "" : " ") << dot_escape(w);
      first = false;
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const KnowledgeGraph& kg) {
  json doc;
  doc["current_location"] = kg.current_location();
  doc["epoch"] = kg.epoch();
  json locs = json::array();
  for (const auto& loc : kg.locations()) {
    json l;
    l["id"] = loc.location_id;
    l["name"] = loc.name;
    l["description"] = loc.description;
    l["entities"] = loc.entities;
    json recs = json::array();
    for (const auto& r : loc.action_records) {
      recs.push_back({{"action", r.action}, {"response", r.response}, {"p_valid", r.p_valid}, {"epoch", r.epoch}});
    }
    l["action_records"] = recs;
    json nav = json::object();
    for (const auto& [d, a] : loc.navigation) {
      nav[std::string(to_string(d))] = {{"status", nav_name(a.status)}, {"to", a.to},
                                        {"attempts", a.attempts}, {"valid_records", a.valid_records}};
    }
    l["navigation"] = nav;
    locs.push_back(l);
  }
  doc["locations"] = locs;
  json ents = json::array();
  for (const auto& e : kg.entities()) {
    ents.push_back({{"id", e.entity_id},
                    {"names", e.names},
                    {"description", e.description},
                    {"contained", e.contained},
                    {"state",
                     {{"open", tri_name(e.state.open)},
                      {"locked", tri_name(e.state.locked)},
                      {"on", tri_name(e.state.on)},
                      {"used", tri_name(e.state.used)}}},
                    {"attributes", e.attributes},
                    {"place", e.place}});
  }
  doc["entities"] = ents;
  json edges = json::array();
  for (const auto& c : kg.connections()) {
    edges.push_back({{"from", c.from}, {"direction", std::string(to_string(c.direction))}, {"to", c.to}});
  }
  doc["connections"] = edges;
  doc["inventory"] = kg.inventory();
  doc["unrecognized_words"] = kg.unrecognized_words();
  doc["warnings"] = kg.warnings();
  return doc.dump(2) + "\n";
}

std::string export_kg(const KnowledgeGraph& kg, ExportFormat format) {
  return format == ExportFormat::kDot ? export_dot(kg) : export_json(kg);
}

KnowledgeGraph import_json(std::string_view document) {
  KnowledgeGraph kg;
  try {
    const json doc = json::parse(document.begin(), document.end());
    for (const auto& l : doc.at("locations")) {
      Location loc;
      loc.location_id = l.at("id").get<int>();
      if (loc.location_id != static_cast<int>(kg.locations_.size())) throw KgError("location ids must be dense");
      loc.name = l.at("name").get<std::string>();
      loc.description = l.at("description").get<std::string>();
      loc.entities = l.at("entities").get<std::vector<int>>();
      for (const auto& r : l.at("action_records")) {
        loc.action_records.push_back({r.at("action").get<std::string>(), r.at("response").get<std::string>(),
                                      r.at("p_valid").get<double>(), r.at("epoch").get<int>()});
      }
      for (const auto& [d, a] : l.at("navigation").items()) {
        loc.navigation[parse_dir(d)] = {parse_nav(a.at("status").get<std::string>()), a.at("to").get<int>(),
                                        a.at("attempts").get<int>(), a.at("valid_records").get<int>()};
      }
      kg.locations_.push_back(std::move(loc));
    }
    for (const auto& je : doc.at("entities")) {
      Entity e;
      e.entity_id = je.at("id").get<int>();
      if (e.entity_id != static_cast<int>(kg.entities_.size())) throw KgError("entity ids must be dense");
      e.names = je.at("names").get<std::vector<std::string>>();
      e.description = je.at("description").get<std::string>();
      e.contained = je.at("contained").get<std::vector<int>>();
      const auto& st = je.at("state");
      e.state = {parse_tri(st.at("open").get<std::string>()), parse_tri(st.at("locked").get<std::string>()),
                 parse_tri(st.at("on").get<std::string>()), parse_tri(st.at("used").get<std::string>())};
      e.attributes = je.at("attributes").get<unsigned>();
      e.place = je.at("place").get<int>();
      kg.entities_.push_back(std::move(e));
    }
    for (const auto& c : doc.at("connections")) {
      kg.connect(c.at("from").get<int>(), parse_dir(c.at("direction").get<std::string>()), c.at("to").get<int>());
    }
    kg.current_ = doc.at("current_location").get<int>();
    kg.epoch_ = doc.at("epoch").get<int>();
    kg.inventory_ = doc.at("inventory").get<std::vector<int>>();
    for (const auto& w : doc.at("unrecognized_words")) kg.unrecognized_.insert(w.get<std::string>());
    kg.warnings_ = doc.value("warnings", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw KgError(std::string("malformed knowledge graph document: ") + e.what());
  }
  return kg;
}

}  // namespace nail::kg
