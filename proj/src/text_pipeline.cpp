#include "faultsim/text_pipeline.hpp"

#include <algorithm>

#include "faultsim/errors.hpp"
#include "faultsim/text_io.hpp"

namespace faultsim {

namespace {

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' ||
         kTokenPunctuation.find(c) != std::string_view::npos;
}

// A word is storable in a list iff tokenizing it yields exactly itself.
bool is_single_token(std::string_view word) {
  const TokenSeq t = tokenize(word);
  return t.size() == 1 && t.front() == word;
}

}  // namespace

TokenSeq tokenize(std::string_view raw) {
  TokenSeq tokens;
  std::string current;
  for (char c : raw) {
    if (is_separator(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    current.push_back(c);
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

StopList::StopList(std::initializer_list<std::string> words) {
  for (const auto& w : words) insert(w);
}

void StopList::insert(std::string word) {
  if (!is_single_token(word)) {
    throw ConfigError("stop word '" + word + "' is not a single lowercase token");
  }
  words_.insert(std::move(word));
}

bool StopList::contains(std::string_view word) const { return words_.find(word) != words_.end(); }

StemTable::StemTable(std::initializer_list<std::pair<std::string, std::string>> entries) {
  for (const auto& [k, v] : entries) insert(k, v);
}

void StemTable::insert(std::string inflected, std::string root) {
  if (!is_single_token(inflected) || !is_single_token(root)) {
    throw ConfigError("stem entry '" + inflected + "' -> '" + root +
                      "' must map a single lowercase token to another");
  }
  // The root must not itself be rewritten, and the new key must not be a
  // root already in use.
  if (auto it = map_.find(root); it != map_.end() && it->second != root) {
    throw ConfigError("stem root '" + root + "' is itself mapped to '" + it->second + "'");
  }
  if (inflected != root) {
    const bool key_is_root = std::any_of(map_.begin(), map_.end(),
                                         [&](const auto& e) { return e.second == inflected; });
    if (key_is_root) {
      throw ConfigError("stem key '" + inflected + "' is already used as a root");
    }
  }
  if (auto it = map_.find(inflected); it != map_.end() && it->second != root) {
    throw ConfigError("stem key '" + inflected + "' mapped twice ('" + it->second + "', '" +
                      root + "')");
  }
  map_.insert_or_assign(std::move(inflected), std::move(root));
}

std::string_view StemTable::lookup(std::string_view word) const {
  auto it = map_.find(word);
  return it == map_.end() ? word : std::string_view(it->second);
}

TokenSeq remove_stopwords(const TokenSeq& tokens, const StopList& stops) {
  TokenSeq out;
  out.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [&](const std::string& t) { return !stops.contains(t); });
  return out;
}

TokenSeq stem(const TokenSeq& tokens, const StemTable& table) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.emplace_back(table.lookup(t));
  return out;
}

void PipelineConfig::validate() const {
  for (const auto& [word, root] : stems.entries()) {
    if (stops.contains(root)) {
      throw ConfigError("stem root '" + root + "' (from '" + word + "') is a stop word");
    }
  }
}

TokenSeq normalize(std::string_view raw, const PipelineConfig& config) {
  return stem(remove_stopwords(tokenize(raw), config.stops), config.stems);
}

StopList default_stop_list() {
  // "no" is deliberately absent: "radio hu no message" and "radio hu message"
  // describe different faults.
  return StopList{"a",    "an",   "and",  "are",  "at",   "be",   "been",
                  "but",  "by",   "does", "for",  "from", "in",   "is",
                  "it",   "not",  "of",   "or",   "preconditions",
                  "remains", "that", "the", "this", "to",  "was",  "were",
                  "will", "with", "y"};
}

StemTable default_stem_table() {
  return StemTable{{"messages", "message"},   {"radios", "radio"},
                   {"signals", "signal"},     {"displays", "display"},
                   {"displayed", "display"},  {"receives", "receive"},
                   {"received", "receive"},   {"receiving", "receive"},
                   {"sends", "send"},         {"sending", "send"},
                   {"sent", "send"},          {"errors", "error"},
                   {"faults", "fault"},       {"headunits", "headunit"},
                   {"speakers", "speaker"},   {"failed", "fail"},
                   {"fails", "fail"},         {"failing", "fail"},
                   {"failure", "fail"},       {"failures", "fail"}};
}

StopList parse_stop_list(std::string_view content, const std::string& source) {
  StopList list;
  std::size_t line_no = 0;
  for (auto line : split_lines(content)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    try {
      list.insert(ascii_lower(line));
    } catch (const ConfigError& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return list;
}

StemTable parse_stem_table(std::string_view content, const std::string& source) {
  StemTable table;
  std::size_t line_no = 0;
  for (auto line : split_lines(content)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError(source, line_no, "expected 'inflected<TAB>root'");
    }
    try {
      table.insert(ascii_lower(trim(fields[0])), ascii_lower(trim(fields[1])));
    } catch (const ConfigError& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return table;
}

StopList load_stop_list(const std::string& path) { return parse_stop_list(read_file(path), path); }

StemTable load_stem_table(const std::string& path) {
  return parse_stem_table(read_file(path), path);
}

}  // namespace faultsim
