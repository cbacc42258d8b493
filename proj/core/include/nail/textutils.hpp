#ifndef NAIL_TEXTUTILS_HPP_
#define NAIL_TEXTUTILS_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nail::text {

// Lowercases and splits on whitespace and punctuation. Hyphens and
// apostrophes survive when they sit between two word characters.
std::vector<std::string> tokenize(std::string_view text);

std::string join(const std::vector<std::string>& tokens,
                 std::string_view sep = " ");

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);

enum PosTag : std::uint8_t {
  kNoun = 1 << 0,
  kVerb = 1 << 1,
  kAdjective = 1 << 2,
  kDeterminer = 1 << 3,
  kPreposition = 1 << 4,
  kPronoun = 1 << 5,
  kOther = 1 << 6,
};

std::uint8_t parse_pos_tag(std::string_view name);

class PosLexicon {
 public:
  PosLexicon() = default;

  // One "word<TAB>tag,tag" line per entry. Blank lines and lines starting
  // with '#' are skipped.
  static PosLexicon parse(std::istream& in);
  static PosLexicon load(const std::string& path);

  void add(std::string_view word, std::uint8_t tags);
  // Empty mask for unknown words. Case-insensitive.
  std::uint8_t tags(std::string_view word) const;
  bool has(std::string_view word, PosTag tag) const {
    return (tags(word) & tag) != 0;
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::uint8_t> entries_;
};

struct NounPhrase {
  std::string text;  // modifiers and head, determiners stripped
  std::string head;
  std::size_t begin = 0;  // token span into tokenize(source)
  std::size_t end = 0;

  bool operator==(const NounPhrase&) const = default;
};

inline constexpr std::size_t kMaxNounPhrases = 20;

// Chunks determiner? adjective* noun+ within clause boundaries.
std::vector<NounPhrase> extract_noun_phrases(std::string_view text,
                                             const PosLexicon& lexicon);

std::size_t levenshtein(std::string_view a, std::string_view b);

// 1 - edit distance / max length, over the sorted unique-token joins.
double fuzzy_ratio(std::string_view a, std::string_view b);

}  // namespace nail::text

#endif  // NAIL_TEXTUTILS_HPP_
