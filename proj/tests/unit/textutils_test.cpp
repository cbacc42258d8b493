#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "nail/rng.hpp"
#include "nail/textutils.hpp"
#include "support.hpp"

using namespace nail;
using nail::testing::bundle;

namespace {

// Plain two-row edit distance, kept separate from the library version.
std::size_t reference_levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] != b[j - 1])});
    }
  }
  return d[a.size()][b.size()];
}

std::string random_sentence(std::mt19937_64& g) {
  static const std::vector<std::string> words = {"the", "door", "open", "small", "mailbox", "forest", "bird",
                                                 "song-bird", "west", "house", "a", "of", "lamp", "brass"};
  std::string s;
  const auto n = rng::below(g, 12);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!s.empty()) s += rng::below(g, 4) == 0 ? ". " : " ";
    s += words[rng::below(g, words.size())];
  }
  return s;
}

}  // namespace

TEST(Tokenize, Examples) {
  EXPECT_EQ(text::tokenize("Open the mailbox."), (std::vector<std::string>{"open", "the", "mailbox"}));
  EXPECT_TRUE(text::tokenize("").empty());
  EXPECT_EQ(text::tokenize("song-bird chirps"), (std::vector<std::string>{"song-bird", "chirps"}));
}

TEST(Tokenize, ApostrophesInsideWords) {
  EXPECT_EQ(text::tokenize("You can't go"), (std::vector<std::string>{"you", "can't", "go"}));
  EXPECT_EQ(text::tokenize("You can\xE2\x80\x99t go"), (std::vector<std::string>{"you", "can't", "go"}));
  EXPECT_EQ(text::tokenize("'quoted' - dash"), (std::vector<std::string>{"quoted", "dash"}));
}

TEST(Tokenize, JoinIsIdempotentOnTokens) {
  std::mt19937_64 g(11);
  for (int i = 0; i < 300; ++i) {
    const auto once = text::tokenize(random_sentence(g));
    EXPECT_EQ(text::tokenize(text::join(once)), once);
  }
}

TEST(Strings, TrimLowerContains) {
  EXPECT_EQ(text::trim("  a b \n"), "a b");
  EXPECT_EQ(text::to_lower("West OF"), "west of");
  EXPECT_TRUE(text::contains_ci("You come across an OLD box.", "old box"));
  EXPECT_FALSE(text::contains_ci("abc", "abd"));
}

TEST(Lexicon, ParseAndLookup) {
  std::istringstream in("# comment\nlamp\tnoun\nopen\tverb,adjective\n\n");
  const auto lex = text::PosLexicon::parse(in);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_TRUE(lex.has("LAMP", text::kNoun));
  EXPECT_TRUE(lex.has("open", text::kAdjective));
  EXPECT_EQ(lex.tags("unknown"), 0);
}

TEST(Lexicon, BundledSizeAtLeastFiveThousand) { EXPECT_GE(bundle().lexicon.size(), 5000u); }

TEST(NounPhrases, Examples) {
  const auto& lex = bundle().lexicon;
  auto texts = [&](std::string_view s) {
    std::vector<std::string> out;
    for (const auto& np : text::extract_noun_phrases(s, lex)) out.push_back(np.text);
    return out;
  };
  EXPECT_EQ(texts("There is a small mailbox here."), (std::vector<std::string>{"small mailbox"}));
  EXPECT_EQ(texts("You hear the chirping of a song bird."), (std::vector<std::string>{"chirping", "song bird"}));
  EXPECT_TRUE(texts("").empty());
}

TEST(NounPhrases, CapAndHeadProperty) {
  const auto& lex = bundle().lexicon;
  std::string long_text;
  for (int i = 0; i < 40; ++i) long_text += "There is a lamp" + std::to_string(i) + " here. ";
  EXPECT_LE(text::extract_noun_phrases(long_text, lex).size(), text::kMaxNounPhrases);

  std::mt19937_64 g(5);
  for (int i = 0; i < 200; ++i) {
    const auto s = random_sentence(g);
    const auto toks = text::tokenize(s);
    for (const auto& np : text::extract_noun_phrases(s, lex)) {
      ASSERT_LT(np.begin, np.end);
      ASSERT_LE(np.end, toks.size());
      EXPECT_EQ(np.head, toks[np.end - 1]);
      const bool noun = lex.has(np.head, text::kNoun);
      const bool unknown_after_modifier = lex.tags(np.head) == 0 && np.end - np.begin > 1;
      EXPECT_TRUE(noun || unknown_after_modifier) << s << " -> " << np.text;
    }
  }
}

TEST(Levenshtein, MatchesReference) {
  std::mt19937_64 g(3);
  for (int i = 0; i < 300; ++i) {
    std::string a, b;
    for (auto n = rng::below(g, 9); n > 0; --n) a += static_cast<char>('a' + rng::below(g, 4));
    for (auto n = rng::below(g, 9); n > 0; --n) b += static_cast<char>('a' + rng::below(g, 4));
    EXPECT_EQ(text::levenshtein(a, b), reference_levenshtein(a, b)) << a << " / " << b;
  }
  EXPECT_EQ(text::levenshtein("kitten", "sitting"), 3u);
}

TEST(FuzzyRatio, Identity) { EXPECT_DOUBLE_EQ(text::fuzzy_ratio("West of House", "West of House"), 1.0); }

TEST(FuzzyRatio, ForestGoldenValue) {
  // Sorted unique joins are "forest" and "a bird chirping distance forest
  // hear in of song the you" (55 chars); their edit distance is 49.
  const std::string longer = "a bird chirping distance forest hear in of song the you";
  const double oracle = 1.0 - static_cast<double>(reference_levenshtein("forest", longer)) / longer.size();
  const double r = text::fuzzy_ratio("Forest.", "Forest. You hear in the distance the chirping of a song bird.");
  EXPECT_NEAR(r, oracle, 1e-12);
  EXPECT_NEAR(r, 0.10909090909090913, 1e-12);
  EXPECT_LT(r, 1.0);
}

TEST(FuzzyRatio, BundledRoomsAreDistinct) {
  for (const char* id : {"minizork", "bedroom", "vault", "balances", "compass"}) {
    const auto spec = nail::testing::game(id);
    for (std::size_t i = 0; i < spec->rooms.size(); ++i) {
      for (std::size_t j = i + 1; j < spec->rooms.size(); ++j) {
        const auto& a = spec->rooms[i];
        const auto& b = spec->rooms[j];
        EXPECT_LT(text::fuzzy_ratio(a.name + "\n" + a.description, b.name + "\n" + b.description), 0.8)
            << id << ": " << a.room_id << " vs " << b.room_id;
      }
    }
  }
}

TEST(FuzzyRatio, SymmetricBoundedAndSetBased) {
  std::mt19937_64 g(17);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_sentence(g);
    const auto b = random_sentence(g);
    const double ab = text::fuzzy_ratio(a, b);
    EXPECT_DOUBLE_EQ(ab, text::fuzzy_ratio(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    auto toks = text::tokenize(a);
    rng::shuffle(toks, g);
    EXPECT_DOUBLE_EQ(text::fuzzy_ratio(a, text::join(toks) + " " + text::join(toks)), 1.0);
    const auto sa = text::tokenize(a), sb = text::tokenize(b);
    if (std::set<std::string>(sa.begin(), sa.end()) != std::set<std::string>(sb.begin(), sb.end())) {
      EXPECT_LT(ab, 1.0);
    }
  }
}
