#pragma once

#include <cstddef>
#include <map>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "faultsim/index.hpp"

namespace faultsim {

/// How the max_tf denominator of the term weight is obtained.
enum class MaxTfMode {
  /// Largest term count within the text being weighted (augmented tf).
  kWithinText,
  /// Document frequency n of the most frequent term of the text.
  kLiteral,
};

struct WeightConfig {
  /// Per-term emphasis; unlisted terms use 1.0. Every value must be > 0.
  std::map<std::string, double, std::less<>> alpha;
  double log_base = std::numbers::e;
  MaxTfMode max_tf_mode = MaxTfMode::kWithinText;

  double alpha_for(std::string_view term) const;

  /// Throws ConfigError for alpha <= 0 or log_base <= 1.
  void validate() const;
};

/// Sparse non-negative term weights. Terms not stored weigh zero.
class TermVector {
 public:
  using Map = std::map<std::string, double, std::less<>>;

  TermVector() = default;
  explicit TermVector(Map weights);

  /// Throws DomainError for a negative or non-finite weight. A zero weight
  /// erases the term.
  void set(std::string term, double weight);
  double get(std::string_view term) const;

  const Map& weights() const noexcept { return weights_; }
  bool empty() const noexcept { return weights_.empty(); }
  std::size_t size() const noexcept { return weights_.size(); }

  friend bool operator==(const TermVector&, const TermVector&) = default;

 private:
  Map weights_;
};

struct SimilarityResult {
  FaultId id = 0;
  double score = 0.0;

  friend bool operator==(const SimilarityResult&, const SimilarityResult&) = default;
};

/// F = 1/2 (1 + tf / max_tf) * log_base(N / n).
/// Throws DomainError when n == 0, max_tf == 0, n > N, tf == 0, or (in
/// within-text mode) tf > max_tf.
double term_weight(std::size_t tf, std::size_t max_tf, std::size_t doc_count,
                   std::size_t doc_freq, const WeightConfig& cfg);

/// Weights every term of `counts` against the corpus. Terms outside the
/// index vocabulary get weight 0.
TermVector vectorize(const TermCounts& counts, const CorpusIndex& index, const WeightConfig& cfg);

/// Weighted cosine: sum (a_i b_i alpha_i^2) / sqrt(sum (alpha_i a_i)^2 * sum (alpha_i b_i)^2).
/// Zero when either vector has zero norm.
double cosine(const TermVector& a, const TermVector& b, const WeightConfig& cfg);

std::map<FaultId, TermVector> vectorize_corpus(const CorpusIndex& index, const WeightConfig& cfg);

/// Scores `query` against every indexed document. Ordered by score
/// descending then id ascending, truncated to `top_k`. Returns nothing when
/// the query carries no weight (empty after normalisation, or every term
/// unseen). Throws DomainError for top_k == 0.
std::vector<SimilarityResult> rank_query(std::string_view query, const CorpusIndex& index,
                                         const WeightConfig& cfg, std::size_t top_k);

/// Key-value file:
///
///     log_base = 10
///     max_tf_mode = within     # or literal
///     [alpha]
///     radio = 0.5
WeightConfig parse_weight_config(std::string_view content, const std::string& source = "<weights>");
WeightConfig load_weight_config(const std::string& path);

MaxTfMode parse_max_tf_mode(std::string_view text);
std::string_view to_string(MaxTfMode mode);

}  // namespace faultsim
