#include "nail/validity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "nail/rng.hpp"
#include "nail/textutils.hpp"

namespace nail::validity {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Straight quotes, so that typographic apostrophes match the rule list.
std::string normalize_quotes(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x80) {
      const auto c = static_cast<unsigned char>(s[i + 2]);
      if (c == 0x98 || c == 0x99) {
        out += '\'';
        i += 2;
        continue;
      }
      if (c == 0x9C || c == 0x9D) {
        out += '"';
        i += 2;
        continue;
      }
    }
    out += s[i];
  }
  return out;
}

std::string hexfloat(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw std::runtime_error("validity model: bad number '" + s + "'");
  return v;
}

}  // namespace

std::vector<LabeledResponse> parse_corpus(std::istream& in) {
  std::vector<LabeledResponse> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("corpus line " + std::to_string(lineno) + ": missing tab");
    }
    const std::string label = line.substr(0, tab);
    LabeledResponse r;
    r.text = line.substr(tab + 1);
    if (label == "success") {
      r.label = Label::kSuccess;
    } else if (label == "failure") {
      r.label = Label::kFailure;
    } else {
      throw std::runtime_error("corpus line " + std::to_string(lineno) + ": unknown label " + label);
    }
    if (text::trim(r.text).empty()) {
      throw std::runtime_error("corpus line " + std::to_string(lineno) + ": empty text");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<LabeledResponse> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus: " + path);
  return parse_corpus(in);
}

Split split_corpus(std::vector<LabeledResponse> corpus, double test_fraction, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  rng::shuffle(corpus, g);
  const auto n_test = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(corpus.size())));
  Split s;
  s.test.assign(corpus.begin(), corpus.begin() + static_cast<std::ptrdiff_t>(n_test));
  s.train.assign(corpus.begin() + static_cast<std::ptrdiff_t>(n_test), corpus.end());
  return s;
}

std::uint64_t hash_feature(std::string_view key, std::uint64_t seed) {
  std::uint64_t h = kFnvOffset;
  for (int i = 0; i < 8; ++i) {
    h ^= (seed >> (8 * i)) & 0xFF;
    h *= kFnvPrime;
  }
  for (unsigned char c : key) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

SparseVector featurize(std::string_view text, std::size_t feature_dim, std::uint64_t hash_seed) {
  const auto tokens = text::tokenize(text);
  if (tokens.empty()) return {};
  std::vector<std::uint32_t> buckets;
  buckets.reserve(2 * tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    buckets.push_back(static_cast<std::uint32_t>(hash_feature(tokens[i], hash_seed) % feature_dim));
    if (i + 1 < tokens.size()) {
      const std::string bigram = tokens[i] + '\x01' + tokens[i + 1];
      buckets.push_back(static_cast<std::uint32_t>(hash_feature(bigram, hash_seed) % feature_dim));
    }
  }
  const double w = 1.0 / static_cast<double>(buckets.size());
  std::map<std::uint32_t, double> acc;
  for (auto b : buckets) acc[b] += w;
  return {acc.begin(), acc.end()};
}

ValidityModel::ValidityModel(std::size_t feature_dim, std::uint64_t hash_seed)
    : weights_(feature_dim, 0.0), hash_seed_(hash_seed) {
  if (feature_dim < kMinFeatureDim) throw std::invalid_argument("feature_dim must be at least 4096");
}

double ValidityModel::model_probability(std::string_view response) const {
  if (!trained_) throw std::logic_error("validity model is not trained");
  double z = bias_;
  for (const auto& [b, v] : featurize(response, weights_.size(), hash_seed_)) z += weights_[b] * v;
  return sigmoid(z);
}

void ValidityModel::save(std::ostream& out) const {
  out << "nail-validity 1\n";
  out << "dim " << weights_.size() << "\n";
  out << "hash_seed " << hash_seed_ << "\n";
  out << "trained " << (trained_ ? 1 : 0) << "\n";
  out << "bias " << hexfloat(bias_) << "\n";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != 0.0) out << i << ' ' << hexfloat(weights_[i]) << '\n';
  }
}

ValidityModel ValidityModel::load(std::istream& in) {
  std::string magic, version, key, value;
  in >> magic >> version;
  if (magic != "nail-validity" || version != "1") throw std::runtime_error("not a validity model file");
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  int trained = 0;
  in >> key >> dim;
  if (key != "dim") throw std::runtime_error("validity model: expected dim");
  in >> key >> seed;
  if (key != "hash_seed") throw std::runtime_error("validity model: expected hash_seed");
  in >> key >> trained;
  if (key != "trained") throw std::runtime_error("validity model: expected trained");
  in >> key >> value;
  if (key != "bias") throw std::runtime_error("validity model: expected bias");
  ValidityModel m(dim, seed);
  m.bias_ = parse_double(value);
  m.trained_ = trained != 0;
  std::size_t idx = 0;
  while (in >> idx >> value) {
    if (idx >= dim) throw std::runtime_error("validity model: weight index out of range");
    m.weights_[idx] = parse_double(value);
  }
  return m;
}

void ValidityModel::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  save(out);
}

ValidityModel ValidityModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load(in);
}

ValidityModel train(const std::vector<LabeledResponse>& corpus, const TrainOptions& options) {
  const bool has_success = std::any_of(corpus.begin(), corpus.end(),
                                       [](const auto& r) { return r.label == Label::kSuccess; });
  const bool has_failure = std::any_of(corpus.begin(), corpus.end(),
                                       [](const auto& r) { return r.label == Label::kFailure; });
  if (!has_success || !has_failure) throw TrainingError("training corpus needs both labels");

  ValidityModel m(options.feature_dim, options.hash_seed);
  std::vector<SparseVector> features;
  features.reserve(corpus.size());
  for (const auto& r : corpus) features.push_back(featurize(r.text, options.feature_dim, options.hash_seed));

  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 g(options.seed);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    rng::shuffle(order, g);
    // Linear decay keeps late epochs from undoing earlier progress.
    const double lr = options.learning_rate * (1.0 - static_cast<double>(epoch) / options.epochs);
    for (std::size_t i : order) {
      double z = m.bias_;
      for (const auto& [b, v] : features[i]) z += m.weights_[b] * v;
      const double y = corpus[i].label == Label::kSuccess ? 1.0 : 0.0;
      const double grad = sigmoid(z) - y;
      for (const auto& [b, v] : features[i]) m.weights_[b] -= lr * grad * v;
      m.bias_ -= lr * grad;
    }
  }
  m.trained_ = true;
  return m;
}

bool is_canonical_failure(std::string_view response) {
  static const std::vector<std::string> kExact = {
      "You can't go that way.",
      "I didn't understand that sentence.",
      "That's not a verb I recognise.",
  };
  static const std::regex kUnknownWord(R"(I don't know the word "?[^" ]+"?\.)");
  const std::string s = text::trim(normalize_quotes(response));
  if (std::find(kExact.begin(), kExact.end(), s) != kExact.end()) return true;
  return std::regex_match(s, kUnknownWord);
}

double p_valid(const ValidityModel& model, std::string_view response) {
  if (!model.trained()) throw std::logic_error("validity model is not trained");
  if (is_canonical_failure(response)) return kRuleFailure;
  return model.model_probability(response);
}

double accuracy(const ValidityModel& model, const std::vector<LabeledResponse>& rows) {
  if (rows.empty()) return 0.0;
  std::size_t right = 0;
  for (const auto& r : rows) {
    const bool predicted = is_valid(p_valid(model, r.text));
    if (predicted == (r.label == Label::kSuccess)) ++right;
  }
  return static_cast<double>(right) / static_cast<double>(rows.size());
}

}  // namespace nail::validity
