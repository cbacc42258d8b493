#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "nail/engine.hpp"
#include "nail/validity.hpp"
#include "support.hpp"

using namespace nail;
using nail::testing::bundle;
using nail::testing::data_path;

namespace {

double weight_sum(const validity::SparseVector& v) {
  return std::accumulate(v.begin(), v.end(), 0.0, [](double s, const auto& p) { return s + p.second; });
}

}  // namespace

TEST(HashFeature, FrozenValues) {
  // 64-bit FNV-1a over the seed's eight little-endian bytes, then the key.
  EXPECT_EQ(validity::hash_feature("go", validity::kDefaultHashSeed), 0x1dedcc5c26edffdfULL);
  EXPECT_EQ(validity::hash_feature("can't\x01go", validity::kDefaultHashSeed), 0x8c0c46e43a95b2f7ULL);
}

TEST(Featurize, Examples) {
  EXPECT_TRUE(validity::featurize("", validity::kDefaultFeatureDim, validity::kDefaultHashSeed).empty());

  const auto one = validity::featurize("go", validity::kDefaultFeatureDim, validity::kDefaultHashSeed);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].first, 65503u);
  EXPECT_DOUBLE_EQ(one[0].second, 1.0);

  const auto v = validity::featurize("you can't go", validity::kDefaultFeatureDim, validity::kDefaultHashSeed);
  std::set<std::uint32_t> expected;
  for (const char* k : {"you", "can't", "go", "you\x01" "can't", "can't\x01go"}) {
    expected.insert(static_cast<std::uint32_t>(validity::hash_feature(k, validity::kDefaultHashSeed) %
                                               validity::kDefaultFeatureDim));
  }
  std::set<std::uint32_t> got;
  for (const auto& [b, w] : v) {
    got.insert(b);
    const double units = w * 5.0;
    EXPECT_NEAR(units, std::round(units), 1e-12);
  }
  EXPECT_EQ(got, expected);
  EXPECT_NEAR(weight_sum(v), 1.0, 1e-12);
}

TEST(Featurize, MeanOfOneHotsProperty) {
  // Collisions are forced by a tiny dimension; weights still sum to one and
  // buckets stay sorted and in range.
  for (const char* s : {"a", "open the door", "The gentle tapping sounds again.", "x y x y x y"}) {
    const auto v = validity::featurize(s, 4096, 9);
    EXPECT_NEAR(weight_sum(v), 1.0, 1e-12) << s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_LT(v[i].first, 4096u);
      if (i) EXPECT_LT(v[i - 1].first, v[i].first);
    }
  }
}

TEST(Corpus, ParseRejectsBadLabels) {
  std::istringstream good("success\tThe grating opens.\nfailure\tYou can't go that way.\n");
  const auto rows = validity::parse_corpus(good);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].label, validity::Label::kSuccess);
  std::istringstream bad("maybe\tHuh.\n");
  EXPECT_ANY_THROW(validity::parse_corpus(bad));
}

TEST(Corpus, SplitIsSeededPartition) {
  const auto corpus = validity::load_corpus(data_path("data/validity_corpus.tsv"));
  const auto a = validity::split_corpus(corpus, 0.2, 1);
  const auto b = validity::split_corpus(corpus, 0.2, 1);
  EXPECT_EQ(a.train.size() + a.test.size(), corpus.size());
  EXPECT_EQ(a.test.size(), static_cast<std::size_t>(corpus.size() * 0.2));
  ASSERT_EQ(a.test.size(), b.test.size());
  for (std::size_t i = 0; i < a.test.size(); ++i) EXPECT_EQ(a.test[i].text, b.test[i].text);
}

TEST(Train, OneClassIsAnError) {
  std::vector<validity::LabeledResponse> rows = {{"Taken.", validity::Label::kSuccess}};
  EXPECT_THROW(validity::train(rows), validity::TrainingError);
}

TEST(Train, UntrainedModelRefuses) {
  validity::ValidityModel m;
  EXPECT_THROW(validity::p_valid(m, "Taken."), std::logic_error);
}

TEST(Train, DeterministicWeights) {
  const auto corpus = validity::load_corpus(data_path("data/validity_corpus.tsv"));
  validity::TrainOptions opt;
  opt.epochs = 5;
  EXPECT_EQ(validity::train(corpus, opt), validity::train(corpus, opt));
}

TEST(Train, HeldOutAccuracy) {
  const auto corpus = validity::load_corpus(data_path("data/validity_corpus.tsv"));
  const auto split = validity::split_corpus(corpus, 0.2, 1);
  EXPECT_GE(validity::accuracy(validity::train(split.train), split.test), 0.90);
}

TEST(Train, SaveLoadRoundTrip) {
  const auto& m = bundle().validity;
  std::stringstream ss;
  m.save(ss);
  const auto back = validity::ValidityModel::load(ss);
  EXPECT_EQ(back, m);
  EXPECT_DOUBLE_EQ(validity::p_valid(back, "The grating opens."), validity::p_valid(m, "The grating opens."));
}

TEST(PValid, Examples) {
  const auto& m = bundle().validity;
  EXPECT_DOUBLE_EQ(validity::p_valid(m, "You can't go that way."), validity::kRuleFailure);
  EXPECT_FALSE(validity::is_valid(validity::p_valid(m, "You can't go that way.")));
  EXPECT_TRUE(validity::is_valid(validity::p_valid(m, "The grating opens.")));
  EXPECT_TRUE(validity::is_valid(validity::p_valid(m, "The cyclops seems somewhat agitated.")));
  EXPECT_TRUE(validity::is_canonical_failure("I don\xE2\x80\x99t know the word xyzzy."));
}

TEST(PValid, EngineMessagesOnTheRightSide) {
  const auto& m = bundle().validity;
  for (const auto& msg : engine::builtin_messages()) {
    EXPECT_EQ(validity::is_valid(validity::p_valid(m, msg.text)), msg.success) << msg.text;
  }
}

TEST(PValid, RangeProperty) {
  const auto& m = bundle().validity;
  const auto corpus = validity::load_corpus(data_path("data/validity_corpus.tsv"));
  for (std::size_t i = 0; i < corpus.size(); i += 7) {
    const double p = validity::p_valid(m, corpus[i].text);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}
