#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "nail/harness.hpp"

namespace nail::harness {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string lpad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

double ratio(int num, int den) { return den > 0 ? static_cast<double>(num) / den : 0.0; }

constexpr DepKind kKinds[] = {DepKind::kEnt, DepKind::kAct, DepKind::kLoc, DepKind::kInv};

}  // namespace

// ---------------------------------------------------------------- resources

std::vector<std::string> load_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    line = text::trim(line);
    if (!line.empty() && line[0] != '#') words.push_back(text::to_lower(line));
  }
  return words;
}

ResourceBundle load_resources(const ResourceOptions& options) {
  const fs::path data = fs::path(options.data_dir) / "data";
  ResourceBundle b;
  if (options.validity_model_path.empty()) {
    b.validity = validity::train(validity::load_corpus((data / "validity_corpus.tsv").string()));
  } else {
    b.validity = validity::ValidityModel::load_file(options.validity_model_path);
  }
  if (options.lm_model_path.empty()) {
    b.lm = lm::train_lm(lm::load_lm_corpus((data / "lm_corpus.txt").string()));
  } else {
    b.lm = lm::NGramModel::load_file(options.lm_model_path);
  }
  b.verbs = load_word_list((data / "verbs.txt").string());
  b.lexicon = text::PosLexicon::load((data / "lexicon.tsv").string());
  return b;
}

// ---------------------------------------------------------------- suites

std::vector<SuiteGame> load_suite(const std::string& games_dir, const std::string& deps_dir) {
  if (!fs::is_directory(games_dir)) throw ConfigError("not a directory: " + games_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(games_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".game") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ConfigError("no .game files in " + games_dir);
  std::vector<SuiteGame> games;
  for (const auto& f : files) {
    SuiteGame g;
    g.path = f.string();
    g.spec = std::make_shared<const engine::GameSpec>(engine::load_game_file(g.path));
    const fs::path deps = fs::path(deps_dir) / (f.stem().string() + ".deps");
    if (!deps_dir.empty() && fs::exists(deps)) g.deps = load_dependencies(deps.string(), *g.spec);
    games.push_back(std::move(g));
  }
  return games;
}

agent::EpisodeResult run_tracked(const SuiteGame& game, std::uint64_t seed, const agent::Resources& res,
                                 const EvalOptions& options, EpisodeSummary& summary) {
  DependencyTracker tracker(game.deps);
  {
    auto [state, obs] = engine::reset(game.spec, seed);
    kg::KnowledgeGraph empty;
    tracker.observe(empty, engine::introspect(state), obs.text);
  }
  auto observer = [&](const agent::AgentContext& ctx, const engine::GameState& state, const agent::StepEvent& ev) {
    tracker.observe(ctx.kg, engine::introspect(state), ev.observation.text);
  };
  agent::EpisodeResult r = options.agent == AgentKind::kNail
                               ? agent::run_episode(game.spec, seed, res, options.config, observer)
                               : agent::run_random_episode(game.spec, seed, options.config.step_budget, observer);
  summary = EpisodeSummary{seed, r.score, r.steps, r.finished, tracker.satisfied()};
  return r;
}

SuiteReport evaluate_suite(const std::vector<SuiteGame>& games, const agent::Resources& res,
                           const EvalOptions& options) {
  SuiteReport report;
  report.agent = options.agent == AgentKind::kNail ? "nail" : "random";
  report.seeds = options.seeds;
  report.step_budget = options.config.step_budget;
  if (options.agent == AgentKind::kNail) report.modules = options.config.modules;
  for (const auto& g : games) {
    GameReport row;
    row.game_id = g.spec->game_id;
    row.max_score = g.spec->max_score;
    row.dependencies = g.deps;
    for (auto seed : options.seeds) {
      EpisodeSummary s;
      run_tracked(g, seed, res, options, s);
      row.episodes.push_back(std::move(s));
    }
    report.games.push_back(std::move(row));
  }
  return report;
}

double GameReport::mean_normalized() const {
  if (episodes.empty() || max_score <= 0) return 0.0;
  double sum = 0.0;
  for (const auto& e : episodes) sum += static_cast<double>(e.score) / max_score;
  return sum / static_cast<double>(episodes.size());
}

bool GameReport::nonzero() const { return mean_normalized() > 0.0; }

int GameReport::deps_satisfied() const {
  int n = 0;
  for (const auto& e : episodes) n += static_cast<int>(std::count(e.deps.begin(), e.deps.end(), true));
  return n;
}

int GameReport::deps_total() const { return static_cast<int>(dependencies.size() * episodes.size()); }

int GameReport::deps_satisfied(DepKind kind) const {
  int n = 0;
  for (const auto& e : episodes) {
    for (std::size_t i = 0; i < dependencies.size() && i < e.deps.size(); ++i) {
      n += dependencies[i].kind == kind && e.deps[i];
    }
  }
  return n;
}

int GameReport::deps_total(DepKind kind) const {
  const auto per = std::count_if(dependencies.begin(), dependencies.end(),
                                 [&](const Dependency& d) { return d.kind == kind; });
  return static_cast<int>(per * static_cast<long>(episodes.size()));
}

double SuiteReport::mean_normalized() const {
  if (games.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& g : games) sum += g.mean_normalized();
  return sum / static_cast<double>(games.size());
}

double SuiteReport::pct_nonzero() const {
  if (games.empty()) return 0.0;
  const auto n = std::count_if(games.begin(), games.end(), [](const GameReport& g) { return g.nonzero(); });
  return 100.0 * static_cast<double>(n) / static_cast<double>(games.size());
}

double SuiteReport::pct_deps() const {
  int sat = 0, total = 0;
  for (const auto& g : games) {
    sat += g.deps_satisfied();
    total += g.deps_total();
  }
  return 100.0 * ratio(sat, total);
}

double SuiteReport::pct_deps(DepKind kind) const {
  int sat = 0, total = 0;
  for (const auto& g : games) {
    sat += g.deps_satisfied(kind);
    total += g.deps_total(kind);
  }
  return 100.0 * ratio(sat, total);
}

std::string SuiteReport::to_json() const {
  json doc;
  doc["agent"] = agent;
  doc["seeds"] = seeds;
  doc["step_budget"] = step_budget;
  doc["modules"] = modules;
  doc["mean_normalized_score"] = mean_normalized();
  doc["pct_nonzero"] = pct_nonzero();
  doc["pct_deps"] = pct_deps();
  json by_kind = json::object();
  for (DepKind k : kKinds) by_kind[std::string(to_string(k))] = pct_deps(k);
  doc["pct_deps_by_kind"] = by_kind;
  json rows = json::array();
  for (const auto& g : games) {
    json row;
    row["game"] = g.game_id;
    row["max_score"] = g.max_score;
    row["mean_normalized_score"] = g.mean_normalized();
    row["nonzero"] = g.nonzero();
    row["deps_satisfied"] = g.deps_satisfied();
    row["deps_total"] = g.deps_total();
    json deps = json::array();
    for (const auto& d : g.dependencies) deps.push_back(d.describe());
    row["dependencies"] = deps;
    json eps = json::array();
    for (const auto& e : g.episodes) {
      eps.push_back({{"seed", e.seed}, {"score", e.score}, {"steps", e.steps}, {"finished", e.finished},
                     {"deps", e.deps}});
    }
    row["episodes"] = eps;
    rows.push_back(row);
  }
  doc["games"] = rows;
  return doc.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "agent " << agent << "  seeds";
  for (auto s : seeds) out << ' ' << s;
  out << "  budget " << step_budget << "\n\n";
  out << pad("game", 12) << lpad("max", 5) << lpad("scores", 16) << lpad("norm", 9) << lpad("deps", 9) << "\n";
  for (const auto& g : games) {
    std::string scores;
    for (const auto& e : g.episodes) scores += (scores.empty() ? "" : ",") + std::to_string(e.score);
    out << pad(g.game_id, 12) << lpad(std::to_string(g.max_score), 5) << lpad(scores, 16)
        << lpad(fixed(g.mean_normalized()), 9)
        << lpad(std::to_string(g.deps_satisfied()) + "/" + std::to_string(g.deps_total()), 9) << "\n";
  }
  out << "\nmean normalized score " << fixed(mean_normalized()) << "\n";
  out << "non-zero games        " << fixed(pct_nonzero(), 1) << "%\n";
  out << "dependencies          " << fixed(pct_deps(), 1) << "%";
  for (DepKind k : kKinds) out << "  " << to_string(k) << ' ' << fixed(pct_deps(k), 1) << '%';
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------- ablation

const std::vector<AblationStep>& ablation_steps() {
  static const std::vector<AblationStep> steps = [] {
    const std::vector<std::pair<std::string, std::vector<std::string>>> adds = {
        {"look-only", {}},
        {"+Navigator", {"Navigator"}},
        {"+Hoarder", {"Hoarder"}},
        {"+Examiner", {"Examiner"}},
        {"+Interactor", {"Interactor"}},
        {"+Idler", {"Idler"}},
        {"+Specialized", {"Restart", "YesNo", "Darkness", "YouHaveTo"}},
    };
    std::vector<AblationStep> out;
    std::vector<std::string> active;
    for (const auto& [label, names] : adds) {
      active.insert(active.end(), names.begin(), names.end());
      AblationStep s{label, {}};
      // Registration always follows the full agent's order.
      for (const auto& m : agent::all_module_names()) {
        if (m == "LookOnly" || std::find(active.begin(), active.end(), m) != active.end()) s.modules.push_back(m);
      }
      out.push_back(std::move(s));
    }
    return out;
  }();
  return steps;
}

std::vector<AblationRow> ablate(const std::vector<SuiteGame>& games, const agent::Resources& res,
                                const std::vector<std::uint64_t>& seeds, int step_budget) {
  std::vector<AblationRow> rows;
  for (const auto& step : ablation_steps()) {
    EvalOptions opt;
    opt.seeds = seeds;
    opt.config.modules = step.modules;
    opt.config.step_budget = step_budget;
    const SuiteReport r = evaluate_suite(games, res, opt);
    rows.push_back({step, r.mean_normalized(), r.pct_nonzero()});
  }
  return rows;
}

std::string ablation_table(const std::vector<AblationRow>& rows) {
  std::ostringstream out;
  out << pad("modules", 14) << lpad("mean norm", 11) << lpad("non-zero", 10) << "\n";
  for (const auto& r : rows) {
    out << pad(r.step.label, 14) << lpad(fixed(r.mean_normalized), 11) << lpad(fixed(r.pct_nonzero, 1) + "%", 10)
        << "\n";
  }
  return out.str();
}

}  // namespace nail::harness
