// Command-line front end: run episodes, evaluate suites, ablate modules and
// train the two models.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nail/harness.hpp"

#ifndef NAIL_DATA_DIR
#define NAIL_DATA_DIR "."
#endif

namespace fs = std::filesystem;
using namespace nail;

namespace {

struct Common {
  std::string data_dir = NAIL_DATA_DIR;
  std::string validity_model;
  std::string lm_model;

  harness::ResourceBundle resources() const {
    return harness::load_resources({data_dir, validity_model, lm_model});
  }
};

std::vector<std::uint64_t> parse_seeds(const std::string& s) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = text::trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size()) throw harness::ConfigError("bad seed '" + item + "'");
    seeds.push_back(v);
  }
  if (seeds.empty()) throw harness::ConfigError("no seeds given");
  return seeds;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = text::trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw harness::ConfigError("cannot write " + path);
  out << content;
}

harness::AgentKind parse_agent(const std::string& s) {
  if (s == "nail") return harness::AgentKind::kNail;
  if (s == "random") return harness::AgentKind::kRandom;
  throw harness::ConfigError("unknown agent '" + s + "' (expected nail or random)");
}

std::string default_deps_dir(const std::string& games_dir, const Common& common) {
  const fs::path sibling = fs::path(games_dir).parent_path() / "deps";
  if (fs::is_directory(sibling)) return sibling.string();
  return (fs::path(common.data_dir) / "deps").string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nail: a modular agent for parser-based text games"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--data-dir", common.data_dir, "Directory holding data/, games/ and deps/");
  app.add_option("--validity-model", common.validity_model, "Trained validity model (default: train from corpus)");
  app.add_option("--lm-model", common.lm_model, "Trained language model (default: train from corpus)");

  // run
  auto* run = app.add_subcommand("run", "Play one game and print the transcript");
  std::string run_game, run_modules, run_config, dump_kg, kg_format = "dot", transcript_path, run_agent = "nail";
  std::uint64_t run_seed = 7;
  int run_steps = agent::kDefaultStepBudget;
  bool quiet = false;
  run->add_option("game", run_game, "Game file")->required()->check(CLI::ExistingFile);
  run->add_option("--seed", run_seed, "Random seed");
  run->add_option("--steps", run_steps, "Step budget")->check(CLI::PositiveNumber);
  run->add_option("--modules", run_modules, "Comma-separated decision modules in registration order");
  run->add_option("--config", run_config, "Run configuration file (JSON)")->check(CLI::ExistingFile);
  run->add_option("--agent", run_agent, "nail or random");
  run->add_option("--dump-kg", dump_kg, "Write the final knowledge graph here");
  run->add_option("--kg-format", kg_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  run->add_option("--transcript", transcript_path, "Write the transcript here instead of stdout");
  run->add_flag("--quiet", quiet, "Print only the final score");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate an agent on every game in a directory");
  std::string eval_dir, eval_seeds = "1,2,3", eval_agent = "nail", eval_deps, eval_json, eval_config, eval_modules;
  int eval_steps = agent::kDefaultStepBudget;
  eval->add_option("suite", eval_dir, "Directory of .game files")->required()->check(CLI::ExistingDirectory);
  eval->add_option("--seeds", eval_seeds, "Comma-separated seeds");
  eval->add_option("--agent", eval_agent, "nail or random");
  eval->add_option("--deps-dir", eval_deps, "Directory of .deps files");
  eval->add_option("--json", eval_json, "Write the structured report here");
  eval->add_option("--config", eval_config, "Run configuration file (JSON)")->check(CLI::ExistingFile);
  eval->add_option("--modules", eval_modules, "Comma-separated decision modules");
  eval->add_option("--steps", eval_steps, "Step budget")->check(CLI::PositiveNumber);

  // ablate
  auto* abl = app.add_subcommand("ablate", "Score curve as decision modules are added");
  std::string abl_dir, abl_seeds = "1,2,3";
  int abl_steps = agent::kDefaultStepBudget;
  abl->add_option("suite", abl_dir, "Directory of .game files")->required()->check(CLI::ExistingDirectory);
  abl->add_option("--seeds", abl_seeds, "Comma-separated seeds");
  abl->add_option("--steps", abl_steps, "Step budget")->check(CLI::PositiveNumber);

  // train-validity
  auto* tv = app.add_subcommand("train-validity", "Train the response validity classifier");
  std::string tv_corpus, tv_out;
  validity::TrainOptions tv_opt;
  double tv_test = 0.2;
  tv->add_option("corpus", tv_corpus, "label<TAB>text corpus")->required()->check(CLI::ExistingFile);
  tv->add_option("--out", tv_out, "Model output path")->required();
  tv->add_option("--epochs", tv_opt.epochs, "Training epochs")->check(CLI::PositiveNumber);
  tv->add_option("--lr", tv_opt.learning_rate, "Initial learning rate")->check(CLI::PositiveNumber);
  tv->add_option("--seed", tv_opt.seed, "Shuffle seed");
  tv->add_option("--test-fraction", tv_test, "Held-out fraction reported, then folded back in")
      ->check(CLI::Range(0.0, 0.9));

  // train-lm
  auto* tl = app.add_subcommand("train-lm", "Train the action language model");
  std::string tl_corpus, tl_out;
  int tl_order = lm::kDefaultOrder;
  tl->add_option("corpus", tl_corpus, "One action per line")->required()->check(CLI::ExistingFile);
  tl->add_option("--order", tl_order, "N-gram order")->check(CLI::Range(2, 9));
  tl->add_option("--out", tl_out, "Model output path")->required();

  // deps
  auto* dp = app.add_subcommand("deps", "Check a dependency file and track it over one episode");
  std::string dp_game, dp_file, dp_agent = "nail";
  std::uint64_t dp_seed = 1;
  dp->add_option("game", dp_game, "Game file")->required()->check(CLI::ExistingFile);
  dp->add_option("deps", dp_file, "Dependency file")->required()->check(CLI::ExistingFile);
  dp->add_option("--seed", dp_seed, "Random seed");
  dp->add_option("--agent", dp_agent, "nail or random");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      auto spec = std::make_shared<const engine::GameSpec>(engine::load_game_file(run_game));
      agent::AgentConfig config = run_config.empty() ? agent::AgentConfig{} : agent::AgentConfig::load_file(run_config);
      if (!run_modules.empty()) {
        config.modules = split_list(run_modules);
        for (const auto& m : config.modules) agent::make_module(m, config.eagerness);
      }
      config.step_budget = run_steps;
      agent::EpisodeResult r;
      if (parse_agent(run_agent) == harness::AgentKind::kNail) {
        const auto res = common.resources();
        r = agent::run_episode(spec, run_seed, res.view(), config);
      } else {
        r = agent::run_random_episode(spec, run_seed, run_steps);
      }
      if (!transcript_path.empty()) {
        write_file(transcript_path, r.transcript);
      } else if (!quiet) {
        std::cout << r.transcript;
      }
      if (!dump_kg.empty()) {
        write_file(dump_kg, kg::export_kg(r.kg, kg_format == "json" ? kg::ExportFormat::kJson : kg::ExportFormat::kDot));
      }
      std::cout << "score " << r.score << "/" << r.max_score << " in " << r.steps << " steps\n";
      return 0;
    }
    if (*eval) {
      harness::EvalOptions opt;
      opt.agent = parse_agent(eval_agent);
      opt.seeds = parse_seeds(eval_seeds);
      if (!eval_config.empty()) opt.config = agent::AgentConfig::load_file(eval_config);
      if (!eval_modules.empty()) {
        opt.config.modules = split_list(eval_modules);
        for (const auto& m : opt.config.modules) agent::make_module(m, opt.config.eagerness);
      }
      opt.config.step_budget = eval_steps;
      const auto games =
          harness::load_suite(eval_dir, eval_deps.empty() ? default_deps_dir(eval_dir, common) : eval_deps);
      const auto res = common.resources();
      const auto report = harness::evaluate_suite(games, res.view(), opt);
      std::cout << report.to_text();
      if (!eval_json.empty()) write_file(eval_json, report.to_json());
      return 0;
    }
    if (*abl) {
      const auto games = harness::load_suite(abl_dir, default_deps_dir(abl_dir, common));
      const auto res = common.resources();
      const auto rows = harness::ablate(games, res.view(), parse_seeds(abl_seeds), abl_steps);
      std::cout << harness::ablation_table(rows);
      return 0;
    }
    if (*tv) {
      const auto corpus = validity::load_corpus(tv_corpus);
      if (tv_test > 0.0) {
        const auto split = validity::split_corpus(corpus, tv_test, tv_opt.seed);
        const auto held = validity::train(split.train, tv_opt);
        std::cout << "held-out accuracy " << validity::accuracy(held, split.test) << " on " << split.test.size()
                  << " examples\n";
      }
      const auto start = std::chrono::steady_clock::now();
      const auto model = validity::train(corpus, tv_opt);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      model.save_file(tv_out);
      std::cout << "trained on " << corpus.size() << " examples in " << took.count() << "s, wrote " << tv_out << "\n";
      return 0;
    }
    if (*tl) {
      const auto corpus = lm::load_lm_corpus(tl_corpus);
      const auto model = lm::train_lm(corpus, tl_order);
      model.save_file(tl_out);
      std::cout << "trained order-" << tl_order << " model on " << corpus.size() << " sentences ("
                << model.vocab_size() << " types), wrote " << tl_out << "\n";
      return 0;
    }
    if (*dp) {
      harness::SuiteGame g;
      g.path = dp_game;
      g.spec = std::make_shared<const engine::GameSpec>(engine::load_game_file(dp_game));
      g.deps = harness::load_dependencies(dp_file, *g.spec);
      harness::EvalOptions opt;
      opt.agent = parse_agent(dp_agent);
      const auto res = common.resources();
      harness::EpisodeSummary s;
      harness::run_tracked(g, dp_seed, res.view(), opt, s);
      for (std::size_t i = 0; i < g.deps.size(); ++i) {
        std::cout << (s.deps[i] ? "[x] " : "[ ] ") << g.deps[i].describe() << "\n";
      }
      std::cout << "satisfied " << std::count(s.deps.begin(), s.deps.end(), true) << "/" << g.deps.size()
                << ", score " << s.score << "/" << g.spec->max_score << "\n";
      return 0;
    }
  } catch (const engine::ParseError& e) {
    std::cerr << "nail: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nail: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
