#ifndef NAIL_VALIDITY_HPP_
#define NAIL_VALIDITY_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Classifies a game response as success (the action was understood and did
// something) or failure.
namespace nail::validity {

// A response is valid iff p_valid >= kThreshold. Shared with the KG effect
// gate.
inline constexpr double kThreshold = 0.5;
// Probability reported for responses caught by the rule layer.
inline constexpr double kRuleFailure = 0.01;
inline constexpr std::size_t kDefaultFeatureDim = std::size_t{1} << 16;
inline constexpr std::size_t kMinFeatureDim = std::size_t{1} << 12;
inline constexpr std::uint64_t kDefaultHashSeed = 0x5eed5eed12345678ULL;

enum class Label { kFailure = 0, kSuccess = 1 };

struct LabeledResponse {
  std::string text;
  Label label = Label::kFailure;
};

// Reads "label<TAB>text" lines where label is success or failure.
std::vector<LabeledResponse> parse_corpus(std::istream& in);
std::vector<LabeledResponse> load_corpus(const std::string& path);

struct Split {
  std::vector<LabeledResponse> train;
  std::vector<LabeledResponse> test;
};
// Seeded shuffle, then the first test_fraction of the rows become the test set.
Split split_corpus(std::vector<LabeledResponse> corpus, double test_fraction,
                   std::uint64_t seed);

// Bucket, weight pairs sorted by bucket; colliding features are summed.
using SparseVector = std::vector<std::pair<std::uint32_t, double>>;

std::uint64_t hash_feature(std::string_view key, std::uint64_t seed);

// Unigrams and adjacent bigrams of tokenize(text), each weighted 1/n.
SparseVector featurize(std::string_view text, std::size_t feature_dim,
                       std::uint64_t hash_seed);

struct TrainOptions {
  int epochs = 40;
  double learning_rate = 5.0;
  std::uint64_t seed = 1;
  std::size_t feature_dim = kDefaultFeatureDim;
  std::uint64_t hash_seed = kDefaultHashSeed;
};

class ValidityModel {
 public:
  ValidityModel() = default;
  ValidityModel(std::size_t feature_dim, std::uint64_t hash_seed);

  std::size_t feature_dim() const { return weights_.size(); }
  std::uint64_t hash_seed() const { return hash_seed_; }
  double bias() const { return bias_; }
  const std::vector<double>& weights() const { return weights_; }
  bool trained() const { return trained_; }

  // Logistic score without the rule layer. Throws if untrained.
  double model_probability(std::string_view response) const;

  void save(std::ostream& out) const;
  static ValidityModel load(std::istream& in);
  void save_file(const std::string& path) const;
  static ValidityModel load_file(const std::string& path);

  bool operator==(const ValidityModel&) const = default;

 private:
  friend ValidityModel train(const std::vector<LabeledResponse>&, const TrainOptions&);

  std::vector<double> weights_;
  double bias_ = 0.0;
  std::uint64_t hash_seed_ = kDefaultHashSeed;
  bool trained_ = false;
};

class TrainingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Logistic regression by SGD over a seeded shuffle of the corpus each epoch.
// Throws TrainingError when the corpus lacks either label.
ValidityModel train(const std::vector<LabeledResponse>& corpus,
                    const TrainOptions& options = {});

// Exact canned failures and the unknown-word pattern.
bool is_canonical_failure(std::string_view response);

// Rule layer first, then the logistic model.
double p_valid(const ValidityModel& model, std::string_view response);

inline bool is_valid(double p) { return p >= kThreshold; }

// Fraction of rows whose predicted side of the threshold matches the label.
double accuracy(const ValidityModel& model, const std::vector<LabeledResponse>& rows);

}  // namespace nail::validity

#endif  // NAIL_VALIDITY_HPP_
