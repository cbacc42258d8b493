#ifndef NAIL_LM_HPP_
#define NAIL_LM_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

// Backoff n-gram model used as a prior over candidate actions.
namespace nail::lm {

inline constexpr int kDefaultOrder = 5;
inline constexpr double kDefaultBackoff = 0.4;
inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";

class NGramModel {
 public:
  int order() const { return order_; }
  double backoff_factor() const { return backoff_; }
  // Distinct real token types, end marker included.
  std::size_t vocab_size() const { return vocab_size_; }
  // Real tokens seen in training, end markers included.
  std::uint64_t total_tokens() const { return total_; }

  std::uint64_t count(const std::vector<std::string>& gram) const;

  // Sum of natural-log stupid-backoff scores of each token given its padded
  // history. The end marker is not scored. Empty phrase scores 0.
  double log_prob(const std::vector<std::string>& phrase) const;
  double log_prob(std::string_view phrase) const;

  // Score of one token given up to order-1 preceding tokens.
  double score(const std::vector<std::string>& history, const std::string& token) const;

  // Header, then "n-gram<TAB>count" lines sorted within each order.
  void save(std::ostream& out) const;
  static NGramModel load(std::istream& in);
  void save_file(const std::string& path) const;
  static NGramModel load_file(const std::string& path);

  bool operator==(const NGramModel&) const = default;

 private:
  friend NGramModel train_lm(const std::vector<std::string>&, int, double);

  int order_ = kDefaultOrder;
  double backoff_ = kDefaultBackoff;
  std::size_t vocab_size_ = 0;
  std::uint64_t total_ = 0;
  // counts_[n - 1] maps space-joined n-grams to frequencies.
  std::vector<std::unordered_map<std::string, std::uint64_t>> counts_;
};

// Pads each sentence with order-1 start markers and one end marker and counts
// every n-gram ending on a real token. Contexts made only of start markers
// are counted once per sentence. Throws std::invalid_argument for an empty
// corpus or order < 2.
NGramModel train_lm(const std::vector<std::string>& corpus, int order = kDefaultOrder,
                    double backoff_factor = kDefaultBackoff);

// One sentence per non-empty line.
std::vector<std::string> load_lm_corpus(const std::string& path);

// Descending log_prob; ties in lexicographic order.
std::vector<std::string> rank_actions(const NGramModel& model, std::vector<std::string> candidates);

}  // namespace nail::lm

#endif  // NAIL_LM_HPP_
