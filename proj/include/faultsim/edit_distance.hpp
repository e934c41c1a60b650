#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

// String distances over Unicode scalar values. The std::string overloads
// decode UTF-8 first. None of these take part in retrieval ranking.

namespace faultsim {

std::size_t levenshtein(std::u32string_view s, std::u32string_view t);
std::size_t levenshtein(std::string_view s, std::string_view t);

/// Restricted variant (optimal string alignment): an adjacent transposition
/// costs 1, but no substring is edited more than once. Hence
/// damerau_levenshtein("ca", "abc") == 3, not 2.
std::size_t damerau_levenshtein(std::u32string_view s, std::u32string_view t);
std::size_t damerau_levenshtein(std::string_view s, std::string_view t);

/// Throws DomainError unless both strings have the same length.
std::size_t hamming(std::u32string_view s, std::u32string_view t);
std::size_t hamming(std::string_view s, std::string_view t);

struct EditWeights {
  double insert = 1.0;
  double remove = 1.0;
  double substitute = 1.0;

  /// Throws ConfigError for negative or non-finite weights.
  void validate() const;
};

double weighted_edit(std::u32string_view s, std::u32string_view t, const EditWeights& w);
double weighted_edit(std::string_view s, std::string_view t, const EditWeights& w);

/// Per-character insertion and deletion costs plus per-pair substitution
/// costs. Optional fallbacks apply to characters without an explicit entry.
/// Substituting a character for itself always costs 0.
class CostMatrix {
 public:
  /// Every insertion costs `ins`, deletion `del`, substitution `sub`.
  static CostMatrix uniform(double ins, double del, double sub);

  void set_insert(char32_t c, double cost);
  void set_delete(char32_t c, double cost);
  /// Throws ConfigError for a nonzero self-substitution.
  void set_substitute(char32_t from, char32_t to, double cost);
  void set_default_insert(double cost);
  void set_default_delete(double cost);
  void set_default_substitute(double cost);

  /// Throw ConfigError naming the character(s) when no cost is defined.
  double insert(char32_t c) const;
  double remove(char32_t c) const;
  double substitute(char32_t from, char32_t to) const;

 private:
  std::map<char32_t, double> insert_;
  std::map<char32_t, double> delete_;
  std::map<std::pair<char32_t, char32_t>, double> substitute_;
  std::optional<double> default_insert_;
  std::optional<double> default_delete_;
  std::optional<double> default_substitute_;
};

/// Minimum-cost alignment of s onto t under `costs`.
double needleman_wunsch(std::u32string_view s, std::u32string_view t, const CostMatrix& costs);
double needleman_wunsch(std::string_view s, std::string_view t, const CostMatrix& costs);

/// TSV triples `op<TAB>chars<TAB>cost`. op is ins, del (chars = one
/// character) or sub (chars = from and to, two characters). chars = `*`
/// sets the fallback for that op.
CostMatrix parse_cost_matrix(std::string_view content, const std::string& source = "<costs>");
CostMatrix load_cost_matrix(const std::string& path);

}  // namespace faultsim
