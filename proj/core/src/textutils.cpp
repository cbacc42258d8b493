#include "nail/textutils.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace nail::text {

namespace {

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;
}

struct ScannedToken {
  std::string text;
  bool clause_start = false;
};

// Shared lexer for tokenize() and the chunker. A clause starts after
// sentence or clause punctuation.
std::vector<ScannedToken> scan(std::string_view s) {
  std::vector<ScannedToken> out;
  std::string cur;
  bool boundary = true;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, boundary});
      cur.clear();
      boundary = false;
    }
  };
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    // U+2019 right single quotation mark, used as an apostrophe.
    const bool curly = c == 0xE2 && i + 2 < n &&
                       static_cast<unsigned char>(s[i + 1]) == 0x80 &&
                       static_cast<unsigned char>(s[i + 2]) == 0x99;
    if (curly || c == '\'' || c == '-') {
      const std::size_t next = curly ? i + 3 : i + 1;
      if (!cur.empty() && next < n &&
          std::isalnum(static_cast<unsigned char>(s[next]))) {
        cur.push_back(c == '-' ? '-' : '\'');
        i = next - 1;
        continue;
      }
      flush();
      i = next - 1;
      continue;
    }
    if (is_word_byte(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
      continue;
    }
    flush();
    if (std::string_view(".,;:!?()\"\n[]").find(static_cast<char>(c)) !=
        std::string_view::npos) {
      boundary = true;
    }
  }
  flush();
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : scan(text)) out.push_back(std::move(t.text));
  return out;
}

std::string join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
  return to_lower(haystack).find(to_lower(needle)) != std::string::npos;
}

std::uint8_t parse_pos_tag(std::string_view name) {
  if (name == "noun") return kNoun;
  if (name == "verb") return kVerb;
  if (name == "adjective") return kAdjective;
  if (name == "determiner") return kDeterminer;
  if (name == "preposition") return kPreposition;
  if (name == "pronoun") return kPronoun;
  if (name == "other") return kOther;
  throw std::invalid_argument("unknown part-of-speech tag: " + std::string(name));
}

PosLexicon PosLexicon::parse(std::istream& in) {
  PosLexicon lex;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("lexicon line " + std::to_string(lineno) +
                               ": missing tab");
    }
    std::uint8_t mask = 0;
    std::string_view rest(line);
    rest.remove_prefix(tab + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      mask |= parse_pos_tag(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    lex.add(std::string_view(line).substr(0, tab), mask);
  }
  return lex;
}

PosLexicon PosLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon: " + path);
  return parse(in);
}

void PosLexicon::add(std::string_view word, std::uint8_t tags) {
  entries_[to_lower(word)] |= tags;
}

std::uint8_t PosLexicon::tags(std::string_view word) const {
  const auto it = entries_.find(to_lower(word));
  return it == entries_.end() ? 0 : it->second;
}

std::vector<NounPhrase> extract_noun_phrases(std::string_view text,
                                             const PosLexicon& lexicon) {
  const auto toks = scan(text);
  const std::size_t n = toks.size();
  std::vector<std::uint8_t> tag(n);
  for (std::size_t i = 0; i < n; ++i) tag[i] = lexicon.tags(toks[i].text);
  auto same_clause = [&](std::size_t j) { return j < n && !toks[j].clause_start; };
  auto is = [&](std::size_t j, std::uint8_t t) { return (tag[j] & t) != 0; };
  auto unknown = [&](std::size_t j) { return tag[j] == 0; };
  auto verb_form = [&](std::size_t j) {
    const auto& w = toks[j].text;
    return is(j, kVerb) && w.size() > 2 && w.back() == 's';
  };

  std::vector<NounPhrase> out;
  std::unordered_set<std::string> seen;
  std::size_t i = 0;
  while (i < n && out.size() < kMaxNounPhrases) {
    const std::size_t start = i;
    // Every token after the first must stay inside the starting clause.
    auto inside = [&](std::size_t j) { return j == start || same_clause(j); };
    std::size_t p = i;
    const bool had_det = is(p, kDeterminer);
    if (had_det) ++p;
    const std::size_t mod_begin = p;
    // A modifier must be followed by something that can continue the phrase.
    while (p < n && inside(p) && is(p, kAdjective) && same_clause(p + 1) &&
           (is(p + 1, kAdjective) || is(p + 1, kNoun) || unknown(p + 1))) {
      ++p;
    }
    const bool had_mod = p > mod_begin;
    const std::size_t noun_begin = p;
    std::size_t q = p;
    while (q < n && inside(q)) {
      if (is(q, kNoun) && !(q > noun_begin && verb_form(q))) {
        ++q;
      } else if (q == noun_begin && unknown(q) && (had_det || had_mod)) {
        ++q;
      } else {
        break;
      }
    }
    // With no noun after the modifiers, a noun-tagged last modifier is the head.
    const bool fallback = q == noun_begin && had_mod && is(noun_begin - 1, kNoun);
    if (q > noun_begin || fallback) {
      std::vector<std::string> words;
      for (std::size_t k = mod_begin; k < q; ++k) words.push_back(toks[k].text);
      NounPhrase np;
      np.text = join(words);
      np.head = words.back();
      np.begin = mod_begin;
      np.end = q;
      if (seen.insert(np.text).second) out.push_back(std::move(np));
      i = q;
    } else {
      i = start + 1;
    }
  }
  return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

namespace {

std::string token_set_join(std::string_view s) {
  auto toks = tokenize(s);
  std::set<std::string> uniq(toks.begin(), toks.end());
  return join(std::vector<std::string>(uniq.begin(), uniq.end()));
}

}  // namespace

double fuzzy_ratio(std::string_view a, std::string_view b) {
  const std::string x = token_set_join(a);
  const std::string y = token_set_join(b);
  const std::size_t longest = std::max(x.size(), y.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(x, y)) / static_cast<double>(longest);
}

}  // namespace nail::text
