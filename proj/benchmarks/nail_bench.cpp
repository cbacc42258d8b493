#include <benchmark/benchmark.h>

#include "support.hpp"

using namespace nail;
using nail::testing::bundle;
using nail::testing::data_path;

namespace {

const char* kWest =
    "West of House\nYou are standing in an open field west of a white house, with a boarded front door. A narrow "
    "path winds north through the tall grass toward the side of the house.";

void BM_FuzzyRatio(benchmark::State& state) {
  const std::string other = std::string(kWest) + " You hear in the distance the chirping of a song bird.";
  for (auto _ : state) benchmark::DoNotOptimize(text::fuzzy_ratio(kWest, other));
}
BENCHMARK(BM_FuzzyRatio);

void BM_NounPhrases(benchmark::State& state) {
  const auto& lex = bundle().lexicon;
  for (auto _ : state) benchmark::DoNotOptimize(text::extract_noun_phrases(kWest, lex));
}
BENCHMARK(BM_NounPhrases);

void BM_PValid(benchmark::State& state) {
  const auto& model = bundle().validity;
  for (auto _ : state) benchmark::DoNotOptimize(validity::p_valid(model, "You can't go that way."));
}
BENCHMARK(BM_PValid);

void BM_TrainValidity(benchmark::State& state) {
  const auto corpus = validity::load_corpus(data_path("data/validity_corpus.tsv"));
  for (auto _ : state) benchmark::DoNotOptimize(validity::train(corpus));
}
BENCHMARK(BM_TrainValidity)->Unit(benchmark::kMillisecond);

void BM_RankActions(benchmark::State& state) {
  const auto& b = bundle();
  std::vector<std::string> actions;
  for (const auto& v : b.verbs) actions.push_back(v + " mailbox");
  for (auto _ : state) benchmark::DoNotOptimize(lm::rank_actions(b.lm, actions));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(actions.size()));
}
BENCHMARK(BM_RankActions)->Unit(benchmark::kMillisecond);

void BM_Episode(benchmark::State& state) {
  const auto spec = nail::testing::game("minizork");
  agent::AgentConfig config;
  config.step_budget = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(agent::run_episode(spec, 1, nail::testing::resources(), config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Episode)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
