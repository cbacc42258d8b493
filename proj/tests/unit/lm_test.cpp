#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "nail/lm.hpp"
#include "nail/rng.hpp"
#include "support.hpp"

using namespace nail;
using nail::testing::bundle;
using nail::testing::data_path;

namespace {

// Brute-force stupid backoff over padded sentences, written without the
// model's count tables. A window counts when it ends on the last start
// marker or on a real token.
class ScanOracle {
 public:
  ScanOracle(const std::vector<std::string>& corpus, int order, double backoff) : order_(order), backoff_(backoff) {
    std::set<std::string> vocab;
    for (const auto& line : corpus) {
      auto words = text::tokenize(line);
      if (words.empty()) continue;
      std::vector<std::string> s(static_cast<std::size_t>(order - 1), "<s>");
      s.insert(s.end(), words.begin(), words.end());
      s.push_back("</s>");
      for (std::size_t i = static_cast<std::size_t>(order - 1); i < s.size(); ++i) vocab.insert(s[i]);
      total_ += s.size() - static_cast<std::size_t>(order - 1);
      sentences_.push_back(std::move(s));
    }
    vocab_ = vocab.size();
  }

  std::size_t occurrences(const std::vector<std::string>& gram) const {
    std::size_t n = 0;
    const std::size_t first_end = static_cast<std::size_t>(order_ - 2);
    for (const auto& s : sentences_) {
      for (std::size_t end = std::max(first_end, gram.size() - 1); end < s.size(); ++end) {
        if (std::equal(gram.begin(), gram.end(), s.begin() + static_cast<std::ptrdiff_t>(end + 1 - gram.size()))) ++n;
      }
    }
    return n;
  }

  double log_prob(const std::vector<std::string>& phrase) const {
    std::vector<std::string> hist(static_cast<std::size_t>(order_ - 1), "<s>");
    double lp = 0.0;
    for (const auto& tok : phrase) {
      lp += std::log(score(hist, tok));
      hist.erase(hist.begin());
      hist.push_back(tok);
    }
    return lp;
  }

 private:
  double score(const std::vector<std::string>& hist, const std::string& tok) const {
    double factor = 1.0;
    for (int n = order_; n >= 1; --n) {
      std::vector<std::string> gram(hist.end() - (n - 1), hist.end());
      gram.push_back(tok);
      const auto c = occurrences(gram);
      if (c > 0) {
        const double denom = n == 1 ? static_cast<double>(total_)
                                    : static_cast<double>(occurrences({gram.begin(), gram.end() - 1}));
        return factor * static_cast<double>(c) / denom;
      }
      factor *= backoff_;
    }
    return std::pow(backoff_, order_ - 1) / static_cast<double>(vocab_ + 1);
  }

  int order_;
  double backoff_;
  std::size_t total_ = 0;
  std::size_t vocab_ = 0;
  std::vector<std::vector<std::string>> sentences_;
};

}  // namespace

TEST(TrainLm, DirectCounts) {
  const auto m = lm::train_lm({"open the door"}, 2);
  EXPECT_EQ(m.count({"open", "the"}), 1u);
  EXPECT_EQ(m.count({"the", "door"}), 1u);
  EXPECT_EQ(m.count({"<s>", "open"}), 1u);
  EXPECT_EQ(m.vocab_size(), 4u);
  EXPECT_EQ(m.total_tokens(), 4u);
}

TEST(TrainLm, Errors) {
  EXPECT_THROW(lm::train_lm({"open the door"}, 1), std::invalid_argument);
  EXPECT_THROW(lm::train_lm({}, 5), std::invalid_argument);
  EXPECT_THROW(lm::train_lm({"", "  "}, 5), std::invalid_argument);
}

TEST(TrainLm, BundledCountsFavorOpenDoor) {
  const auto& m = bundle().lm;
  EXPECT_GT(m.count({"open", "the", "door"}), m.count({"light", "the", "door"}));
  EXPECT_GT(m.count({"open", "door"}), m.count({"light", "door"}));
}

TEST(TrainLm, PrefixCountProperty) {
  // Every n-gram count is bounded by its (n-1)-gram prefix count.
  const auto corpus = lm::load_lm_corpus(data_path("data/lm_corpus.txt"));
  const auto& m = bundle().lm;
  std::mt19937_64 g(21);
  for (int i = 0; i < 400; ++i) {
    auto toks = text::tokenize(corpus[rng::below(g, corpus.size())]);
    std::vector<std::string> padded(4, "<s>");
    padded.insert(padded.end(), toks.begin(), toks.end());
    padded.push_back("</s>");
    const auto end = 4 + rng::below(g, toks.size() + 1);
    const auto n = 2 + rng::below(g, 4);
    std::vector<std::string> gram(padded.begin() + static_cast<std::ptrdiff_t>(end + 1 - n),
                                  padded.begin() + static_cast<std::ptrdiff_t>(end + 1));
    std::vector<std::string> prefix(gram.begin(), gram.end() - 1);
    EXPECT_GT(m.count(gram), 0u);
    EXPECT_LE(m.count(gram), m.count(prefix));
  }
}

TEST(LogProb, MatchesScanOracle) {
  const auto corpus = lm::load_lm_corpus(data_path("data/lm_corpus.txt"));
  const ScanOracle oracle(corpus, 5, 0.4);
  const auto& m = bundle().lm;
  for (const char* phrase : {"open the door", "open the torch", "light the door", "zzqx", "unlock door with key",
                             "take lamp", "the the the"}) {
    EXPECT_NEAR(m.log_prob(phrase), oracle.log_prob(text::tokenize(phrase)), 1e-9) << phrase;
  }
}

TEST(LogProb, FrozenValues) {
  const auto& m = bundle().lm;
  EXPECT_NEAR(m.log_prob("open the door"), -6.89115, 1e-4);
  EXPECT_NEAR(m.log_prob("open the torch"), -10.7374, 1e-4);
  EXPECT_NEAR(m.log_prob("light the door"), -12.6033, 1e-4);
}

TEST(LogProb, Examples) {
  const auto& m = bundle().lm;
  EXPECT_GT(m.log_prob("open the door"), m.log_prob("open the torch"));
  EXPECT_GT(m.log_prob("open the torch"), m.log_prob("light the door"));
  EXPECT_EQ(m.log_prob(""), 0.0);
  const double closed_form = std::log(std::pow(0.4, 4) / static_cast<double>(m.vocab_size() + 1));
  EXPECT_NEAR(m.log_prob("zzqx"), closed_form, 1e-12);
}

TEST(LogProb, FiniteAndNonPositiveProperty) {
  const auto& m = bundle().lm;
  std::mt19937_64 g(8);
  const std::vector<std::string> words = {"open", "the", "door", "qqq", "lamp", "with", "</s>", "take"};
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> phrase;
    for (auto n = 1 + rng::below(g, 6); n > 0; --n) phrase.push_back(words[rng::below(g, words.size())]);
    const double lp = m.log_prob(phrase);
    EXPECT_TRUE(std::isfinite(lp));
    EXPECT_LE(lp, 0.0);
  }
}

TEST(LmModel, SaveLoadRoundTrip) {
  const auto m = lm::train_lm({"open the door", "take the lamp", "open the box"}, 3);
  std::stringstream ss;
  m.save(ss);
  const auto back = lm::NGramModel::load(ss);
  EXPECT_EQ(back, m);
  EXPECT_DOUBLE_EQ(back.log_prob("open the lamp"), m.log_prob("open the lamp"));
}

TEST(RankActions, Examples) {
  const auto& m = bundle().lm;
  EXPECT_EQ(lm::rank_actions(m, {"light the door", "open the door"}),
            (std::vector<std::string>{"open the door", "light the door"}));
  EXPECT_TRUE(lm::rank_actions(m, {}).empty());
  const auto r = lm::rank_actions(m, {"open the door", "light the door", "open the door"});
  EXPECT_EQ(r, (std::vector<std::string>{"open the door", "open the door", "light the door"}));
}

TEST(RankActions, SortedPermutationProperty) {
  const auto& m = bundle().lm;
  std::vector<std::string> in = {"take lamp", "eat lamp", "open mailbox", "zzz mailbox", "drop sword", "read leaflet"};
  const auto out = lm::rank_actions(m, in);
  EXPECT_TRUE(std::is_permutation(in.begin(), in.end(), out.begin(), out.end()));
  for (std::size_t i = 1; i < out.size(); ++i) EXPECT_GE(m.log_prob(out[i - 1]), m.log_prob(out[i]));
}
