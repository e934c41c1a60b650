#include "faultsim/edit_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "faultsim/errors.hpp"
#include "faultsim/text_io.hpp"

namespace faultsim {

namespace {

std::string describe(char32_t c) { return "'" + utf8_encode(std::u32string(1, c)) + "'"; }

void check_cost(double cost, const std::string& what) {
  if (!(cost >= 0.0) || !std::isfinite(cost)) {
    throw ConfigError(what + " cost must be finite and non-negative");
  }
}

// Generic two-row edit DP with per-character costs.
template <typename Ins, typename Del, typename Sub>
double edit_dp(std::u32string_view s, std::u32string_view t, Ins ins, Del del, Sub sub) {
  std::vector<double> prev(t.size() + 1);
  std::vector<double> cur(t.size() + 1);
  prev[0] = 0.0;
  for (std::size_t j = 1; j <= t.size(); ++j) prev[j] = prev[j - 1] + ins(t[j - 1]);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    cur[0] = prev[0] + del(s[i - 1]);
    for (std::size_t j = 1; j <= t.size(); ++j) {
      cur[j] = std::min({prev[j] + del(s[i - 1]), cur[j - 1] + ins(t[j - 1]),
                         prev[j - 1] + sub(s[i - 1], t[j - 1])});
    }
    std::swap(prev, cur);
  }
  return prev[t.size()];
}

}  // namespace

std::size_t levenshtein(std::u32string_view s, std::u32string_view t) {
  std::vector<std::size_t> prev(t.size() + 1);
  std::vector<std::size_t> cur(t.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= s.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t cost = s[i - 1] == t[j - 1] ? 0 : 1;
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
    }
    std::swap(prev, cur);
  }
  return prev[t.size()];
}

std::size_t levenshtein(std::string_view s, std::string_view t) {
  return levenshtein(utf8_decode(s), utf8_decode(t));
}

std::size_t damerau_levenshtein(std::u32string_view s, std::u32string_view t) {
  const std::size_t m = s.size();
  const std::size_t n = t.size();
  // Full table: the transposition case looks two rows back.
  std::vector<std::size_t> d((m + 1) * (n + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * (n + 1) + j]; };
  for (std::size_t i = 0; i <= m; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= n; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t cost = s[i - 1] == t[j - 1] ? 0 : 1;
      std::size_t best = std::min({at(i - 1, j) + 1, at(i, j - 1) + 1, at(i - 1, j - 1) + cost});
      if (i > 1 && j > 1 && s[i - 1] == t[j - 2] && s[i - 2] == t[j - 1]) {
        best = std::min(best, at(i - 2, j - 2) + 1);
      }
      at(i, j) = best;
    }
  }
  return at(m, n);
}

std::size_t damerau_levenshtein(std::string_view s, std::string_view t) {
  return damerau_levenshtein(utf8_decode(s), utf8_decode(t));
}

std::size_t hamming(std::u32string_view s, std::u32string_view t) {
  if (s.size() != t.size()) {
    throw DomainError("Hamming distance is defined only for inputs of the same length (got " +
                      std::to_string(s.size()) + " and " + std::to_string(t.size()) + ")");
  }
  std::size_t diff = 0;
  for (std::size_t i = 0; i < s.size(); ++i) diff += s[i] != t[i] ? 1 : 0;
  return diff;
}

std::size_t hamming(std::string_view s, std::string_view t) {
  return hamming(utf8_decode(s), utf8_decode(t));
}

void EditWeights::validate() const {
  check_cost(insert, "insertion");
  check_cost(remove, "deletion");
  check_cost(substitute, "substitution");
}

double weighted_edit(std::u32string_view s, std::u32string_view t, const EditWeights& w) {
  w.validate();
  return edit_dp(
      s, t, [&](char32_t) { return w.insert; }, [&](char32_t) { return w.remove; },
      [&](char32_t a, char32_t b) { return a == b ? 0.0 : w.substitute; });
}

double weighted_edit(std::string_view s, std::string_view t, const EditWeights& w) {
  return weighted_edit(utf8_decode(s), utf8_decode(t), w);
}

CostMatrix CostMatrix::uniform(double ins, double del, double sub) {
  CostMatrix m;
  m.set_default_insert(ins);
  m.set_default_delete(del);
  m.set_default_substitute(sub);
  return m;
}

void CostMatrix::set_insert(char32_t c, double cost) {
  check_cost(cost, "insertion");
  insert_[c] = cost;
}

void CostMatrix::set_delete(char32_t c, double cost) {
  check_cost(cost, "deletion");
  delete_[c] = cost;
}

void CostMatrix::set_substitute(char32_t from, char32_t to, double cost) {
  check_cost(cost, "substitution");
  if (from == to && cost != 0.0) {
    throw ConfigError("substituting " + describe(from) + " for itself must cost 0");
  }
  substitute_[{from, to}] = cost;
}

void CostMatrix::set_default_insert(double cost) {
  check_cost(cost, "insertion");
  default_insert_ = cost;
}

void CostMatrix::set_default_delete(double cost) {
  check_cost(cost, "deletion");
  default_delete_ = cost;
}

void CostMatrix::set_default_substitute(double cost) {
  check_cost(cost, "substitution");
  default_substitute_ = cost;
}

double CostMatrix::insert(char32_t c) const {
  if (auto it = insert_.find(c); it != insert_.end()) return it->second;
  if (default_insert_) return *default_insert_;
  throw ConfigError("no insertion cost for character " + describe(c));
}

double CostMatrix::remove(char32_t c) const {
  if (auto it = delete_.find(c); it != delete_.end()) return it->second;
  if (default_delete_) return *default_delete_;
  throw ConfigError("no deletion cost for character " + describe(c));
}

double CostMatrix::substitute(char32_t from, char32_t to) const {
  if (from == to) return 0.0;
  if (auto it = substitute_.find({from, to}); it != substitute_.end()) return it->second;
  if (default_substitute_) return *default_substitute_;
  throw ConfigError("no substitution cost for " + describe(from) + " -> " + describe(to));
}

double needleman_wunsch(std::u32string_view s, std::u32string_view t, const CostMatrix& costs) {
  // Resolve every lookup before the DP so a missing entry is reported even
  // when it would not lie on the optimal path.
  for (char32_t c : s) costs.remove(c);
  for (char32_t c : t) costs.insert(c);
  for (char32_t a : s) {
    for (char32_t b : t) costs.substitute(a, b);
  }
  return edit_dp(
      s, t, [&](char32_t c) { return costs.insert(c); },
      [&](char32_t c) { return costs.remove(c); },
      [&](char32_t a, char32_t b) { return costs.substitute(a, b); });
}

double needleman_wunsch(std::string_view s, std::string_view t, const CostMatrix& costs) {
  return needleman_wunsch(utf8_decode(s), utf8_decode(t), costs);
}

CostMatrix parse_cost_matrix(std::string_view content, const std::string& source) {
  CostMatrix m;
  std::size_t line_no = 0;
  for (auto line : split_lines(content)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto f = split(line, '\t');
    if (f.size() != 3) throw ParseError(source, line_no, "expected 'op<TAB>chars<TAB>cost'");
    try {
      const double cost = parse_double(f[2], "cost");
      const bool wildcard = f[1] == "*";
      const std::u32string chars = utf8_decode(f[1]);
      if (f[0] == "ins" || f[0] == "del") {
        if (!wildcard && chars.size() != 1) {
          throw ParseError(std::string(f[0]) + " expects exactly one character");
        }
        if (f[0] == "ins") {
          wildcard ? m.set_default_insert(cost) : m.set_insert(chars[0], cost);
        } else {
          wildcard ? m.set_default_delete(cost) : m.set_delete(chars[0], cost);
        }
      } else if (f[0] == "sub") {
        if (wildcard) {
          m.set_default_substitute(cost);
        } else if (chars.size() == 2) {
          m.set_substitute(chars[0], chars[1], cost);
        } else {
          throw ParseError("sub expects exactly two characters (from, to)");
        }
      } else {
        throw ParseError("unknown op '" + std::string(f[0]) + "' (expected ins, del or sub)");
      }
    } catch (const ParseError& e) {
      throw ParseError(source, line_no, e.what());
    } catch (const ConfigError& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return m;
}

CostMatrix load_cost_matrix(const std::string& path) {
  return parse_cost_matrix(read_file(path), path);
}

}  // namespace faultsim
