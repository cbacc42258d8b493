#include "nail/lm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nail/textutils.hpp"

namespace nail::lm {

namespace {

std::string key_of(const std::vector<std::string>& toks, std::size_t begin, std::size_t end) {
  std::string k;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) k += ' ';
    k += toks[i];
  }
  return k;
}

std::uint64_t lookup(const std::unordered_map<std::string, std::uint64_t>& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

std::uint64_t NGramModel::count(const std::vector<std::string>& gram) const {
  if (gram.empty() || gram.size() > counts_.size()) return 0;
  return lookup(counts_[gram.size() - 1], key_of(gram, 0, gram.size()));
}

double NGramModel::score(const std::vector<std::string>& history, const std::string& token) const {
  double factor = 1.0;
  for (int n = order_; n >= 1; --n) {
    const std::size_t ctx_len = static_cast<std::size_t>(n - 1);
    if (ctx_len > history.size()) {
      factor *= backoff_;
      continue;
    }
    std::vector<std::string> gram(history.end() - static_cast<std::ptrdiff_t>(ctx_len), history.end());
    gram.push_back(token);
    const std::uint64_t c = lookup(counts_[n - 1], key_of(gram, 0, gram.size()));
    if (c > 0) {
      const std::uint64_t denom =
          n == 1 ? total_ : lookup(counts_[n - 2], key_of(gram, 0, ctx_len));
      return factor * static_cast<double>(c) / static_cast<double>(denom);
    }
    factor *= backoff_;
  }
  return std::pow(backoff_, order_ - 1) / static_cast<double>(vocab_size_ + 1);
}

double NGramModel::log_prob(const std::vector<std::string>& phrase) const {
  if (counts_.empty()) throw std::logic_error("language model is not trained");
  std::vector<std::string> history(static_cast<std::size_t>(order_ - 1), std::string(kBos));
  double lp = 0.0;
  for (const auto& tok : phrase) {
    lp += std::log(score(history, tok));
    history.erase(history.begin());
    history.push_back(tok);
  }
  return lp;
}

double NGramModel::log_prob(std::string_view phrase) const { return log_prob(text::tokenize(phrase)); }

NGramModel train_lm(const std::vector<std::string>& corpus, int order, double backoff_factor) {
  if (order < 2) throw std::invalid_argument("n-gram order must be at least 2");
  if (!(backoff_factor > 0.0 && backoff_factor < 1.0)) {
    throw std::invalid_argument("backoff factor must lie in (0,1)");
  }
  NGramModel m;
  m.order_ = order;
  m.backoff_ = backoff_factor;
  m.counts_.resize(static_cast<std::size_t>(order));
  std::set<std::string> vocab;
  std::size_t sentences = 0;
  const auto pad = static_cast<std::size_t>(order - 1);
  for (const auto& line : corpus) {
    auto words = text::tokenize(line);
    if (words.empty()) continue;
    ++sentences;
    std::vector<std::string> toks(pad, std::string(kBos));
    toks.insert(toks.end(), words.begin(), words.end());
    toks.emplace_back(kEos);
    for (std::size_t i = pad; i < toks.size(); ++i) {
      vocab.insert(toks[i]);
      ++m.total_;
      for (std::size_t n = 1; n <= static_cast<std::size_t>(order); ++n) {
        ++m.counts_[n - 1][key_of(toks, i + 1 - n, i + 1)];
      }
    }
    for (std::size_t n = 1; n < static_cast<std::size_t>(order); ++n) {
      ++m.counts_[n - 1][key_of(toks, 0, n)];
    }
  }
  if (sentences == 0) throw std::invalid_argument("language model corpus is empty");
  m.vocab_size_ = vocab.size();
  return m;
}

void NGramModel::save(std::ostream& out) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", backoff_);
  out << "nail-lm 1\norder " << order_ << "\nbackoff " << buf << "\nvocab " << vocab_size_
      << "\ntotal " << total_ << "\n";
  for (std::size_t n = 0; n < counts_.size(); ++n) {
    std::map<std::string, std::uint64_t> sorted(counts_[n].begin(), counts_[n].end());
    out << "\\" << n + 1 << "-grams " << sorted.size() << "\n";
    for (const auto& [k, c] : sorted) out << k << '\t' << c << '\n';
  }
}

NGramModel NGramModel::load(std::istream& in) {
  std::string line, key;
  auto expect = [&](const char* name) {
    if (!std::getline(in, line)) throw std::runtime_error("language model: truncated header");
    std::istringstream ss(line);
    std::string value;
    ss >> key >> value;
    if (key != name) throw std::runtime_error(std::string("language model: expected ") + name);
    return value;
  };
  if (!std::getline(in, line) || line != "nail-lm 1") throw std::runtime_error("not a language model file");
  NGramModel m;
  m.order_ = std::stoi(expect("order"));
  m.backoff_ = std::strtod(expect("backoff").c_str(), nullptr);
  m.vocab_size_ = std::stoull(expect("vocab"));
  m.total_ = std::stoull(expect("total"));
  if (m.order_ < 2) throw std::runtime_error("language model: order must be at least 2");
  m.counts_.resize(static_cast<std::size_t>(m.order_));
  for (int n = 1; n <= m.order_; ++n) {
    if (!std::getline(in, line)) throw std::runtime_error("language model: missing section");
    std::istringstream ss(line);
    std::string tag;
    std::size_t entries = 0;
    ss >> tag >> entries;
    if (tag != "\\" + std::to_string(n) + "-grams") throw std::runtime_error("language model: bad section " + tag);
    for (std::size_t i = 0; i < entries; ++i) {
      if (!std::getline(in, line)) throw std::runtime_error("language model: truncated section");
      const auto tab = line.find('\t');
      if (tab == std::string::npos) throw std::runtime_error("language model: bad line");
      m.counts_[n - 1][line.substr(0, tab)] = std::stoull(line.substr(tab + 1));
    }
  }
  return m;
}

void NGramModel::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  save(out);
}

NGramModel NGramModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load(in);
}

std::vector<std::string> load_lm_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!text::trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> rank_actions(const NGramModel& model, std::vector<std::string> candidates) {
  std::vector<std::pair<double, std::string>> scored;
  scored.reserve(candidates.size());
  for (auto& c : candidates) scored.emplace_back(model.log_prob(std::string_view(c)), std::move(c));
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::string> out;
  out.reserve(scored.size());
  for (auto& [s, c] : scored) out.push_back(std::move(c));
  return out;
}

}  // namespace nail::lm
