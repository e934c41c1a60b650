#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace faultsim {

/// Ordered tokens of a text. Every token is non-empty, lowercase, and free
/// of whitespace and of the separator punctuation recognised by tokenize().
using TokenSeq = std::vector<std::string>;

/// Characters that separate tokens in addition to whitespace.
inline constexpr std::string_view kTokenPunctuation = ":;.,!?()->";

/// Lowercase (ASCII), split on whitespace and kTokenPunctuation, drop empties.
TokenSeq tokenize(std::string_view raw);

/// Set of words that carry no discriminating meaning.
class StopList {
 public:
  StopList() = default;
  StopList(std::initializer_list<std::string> words);

  /// Throws ConfigError for an empty or non-normalised word.
  void insert(std::string word);

  bool contains(std::string_view word) const;
  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const noexcept { return words_; }

  friend bool operator==(const StopList&, const StopList&) = default;

 private:
  std::set<std::string, std::less<>> words_;
};

/// Lookup table from inflected word to its root. Roots are fixed points of
/// the table, which makes stemming idempotent.
class StemTable {
 public:
  StemTable() = default;
  StemTable(std::initializer_list<std::pair<std::string, std::string>> entries);

  /// Throws ConfigError if either side is not a single normalised token, or
  /// if the entry would break the fixed-point property of roots.
  void insert(std::string inflected, std::string root);

  /// Root of `word`, or `word` itself when unlisted.
  std::string_view lookup(std::string_view word) const;

  bool empty() const noexcept { return map_.empty(); }
  std::size_t size() const noexcept { return map_.size(); }
  const std::map<std::string, std::string, std::less<>>& entries() const noexcept { return map_; }

  friend bool operator==(const StemTable&, const StemTable&) = default;

 private:
  std::map<std::string, std::string, std::less<>> map_;
};

TokenSeq remove_stopwords(const TokenSeq& tokens, const StopList& stops);
TokenSeq stem(const TokenSeq& tokens, const StemTable& table);

/// The word lists a corpus was indexed with. Queries must be normalised
/// with the same configuration.
struct PipelineConfig {
  StopList stops;
  StemTable stems;

  /// Throws ConfigError when a stem root is itself a stop word; such a
  /// configuration would make the pipeline non-idempotent.
  void validate() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// tokenize -> remove_stopwords -> stem.
TokenSeq normalize(std::string_view raw, const PipelineConfig& config);

/// Built-in lists, identical to data/stopwords.txt and data/stems.tsv.
StopList default_stop_list();
StemTable default_stem_table();

/// One word per line; blank lines and lines starting with '#' are skipped.
StopList parse_stop_list(std::string_view content, const std::string& source = "<stopwords>");
/// `inflected<TAB>root` per line; '#' comments allowed.
StemTable parse_stem_table(std::string_view content, const std::string& source = "<stems>");

StopList load_stop_list(const std::string& path);
StemTable load_stem_table(const std::string& path);

}  // namespace faultsim
