#include "faultsim/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "faultsim/errors.hpp"
#include "faultsim/text_io.hpp"

namespace faultsim {

double WeightConfig::alpha_for(std::string_view term) const {
  auto it = alpha.find(term);
  return it == alpha.end() ? 1.0 : it->second;
}

void WeightConfig::validate() const {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw ConfigError("log_base must be a finite number greater than 1");
  }
  for (const auto& [term, a] : alpha) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw ConfigError("alpha for '" + term + "' must be positive");
    }
  }
}

TermVector::TermVector(Map weights) {
  for (auto& [term, w] : weights) set(term, w);
}

void TermVector::set(std::string term, double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw DomainError("term weight for '" + term + "' must be finite and non-negative");
  }
  if (weight == 0.0) {
    weights_.erase(term);
  } else {
    weights_.insert_or_assign(std::move(term), weight);
  }
}

double TermVector::get(std::string_view term) const {
  auto it = weights_.find(term);
  return it == weights_.end() ? 0.0 : it->second;
}

double term_weight(std::size_t tf, std::size_t max_tf, std::size_t doc_count,
                   std::size_t doc_freq, const WeightConfig& cfg) {
  if (doc_freq == 0) throw DomainError("term occurs in no entry (n_i = 0); cannot weight");
  if (max_tf == 0) throw DomainError("max_tf = 0; cannot weight");
  if (tf == 0) throw DomainError("tf = 0; absent terms carry no weight");
  if (doc_freq > doc_count) throw DomainError("n_i exceeds the number of entries N");
  if (cfg.max_tf_mode == MaxTfMode::kWithinText && tf > max_tf) {
    throw DomainError("tf exceeds max_tf");
  }
  const double augmented = 0.5 * (1.0 + static_cast<double>(tf) / static_cast<double>(max_tf));
  const double idf = std::log(static_cast<double>(doc_count) / static_cast<double>(doc_freq)) /
                     std::log(cfg.log_base);
  return augmented * idf;
}

TermVector vectorize(const TermCounts& counts, const CorpusIndex& index, const WeightConfig& cfg) {
  TermVector out;
  if (counts.empty()) return out;

  std::size_t max_tf = 0;
  if (cfg.max_tf_mode == MaxTfMode::kWithinText) {
    for (const auto& [term, tf] : counts) max_tf = std::max(max_tf, tf);
  } else {
    // n of the most frequent known term; ties go to the larger n.
    std::size_t best_tf = 0;
    for (const auto& [term, tf] : counts) {
      const std::size_t n = index.document_frequency(term);
      if (n == 0) continue;
      if (tf > best_tf || (tf == best_tf && n > max_tf)) {
        best_tf = tf;
        max_tf = n;
      }
    }
    if (max_tf == 0) return out;
  }

  for (const auto& [term, tf] : counts) {
    const std::size_t n = index.document_frequency(term);
    if (n == 0) continue;
    out.set(term, term_weight(tf, max_tf, index.doc_count(), n, cfg));
  }
  return out;
}

double cosine(const TermVector& a, const TermVector& b, const WeightConfig& cfg) {
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (const auto& [term, w] : a.weights()) {
    const double alpha = cfg.alpha_for(term);
    const double scaled = alpha * w;
    norm_a += scaled * scaled;
    // (alpha a)(alpha b) rather than ((alpha a) alpha) b keeps the result
    // bit-for-bit symmetric in a and b.
    dot += scaled * (alpha * b.get(term));
  }
  for (const auto& [term, w] : b.weights()) {
    const double scaled = cfg.alpha_for(term) * w;
    norm_b += scaled * scaled;
  }
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(norm_a * norm_b), 0.0, 1.0);
}

std::map<FaultId, TermVector> vectorize_corpus(const CorpusIndex& index, const WeightConfig& cfg) {
  std::map<FaultId, TermVector> out;
  for (const auto& [id, counts] : index.docs()) out.emplace(id, vectorize(counts, index, cfg));
  return out;
}

std::vector<SimilarityResult> rank_query(std::string_view query, const CorpusIndex& index,
                                         const WeightConfig& cfg, std::size_t top_k) {
  if (top_k == 0) throw DomainError("top_k must be at least 1");
  cfg.validate();
  const TermVector q = vectorize(index.count_terms(query), index, cfg);
  if (q.empty()) return {};

  std::vector<SimilarityResult> results;
  results.reserve(index.doc_count());
  for (const auto& [id, counts] : index.docs()) {
    results.push_back({id, cosine(q, vectorize(counts, index, cfg), cfg)});
  }
  std::sort(results.begin(), results.end(), [](const auto& x, const auto& y) {
    return x.score != y.score ? x.score > y.score : x.id < y.id;
  });
  if (results.size() > top_k) results.resize(top_k);
  return results;
}

MaxTfMode parse_max_tf_mode(std::string_view text) {
  if (text == "within") return MaxTfMode::kWithinText;
  if (text == "literal") return MaxTfMode::kLiteral;
  throw ConfigError("unknown max_tf_mode '" + std::string(text) + "' (expected within|literal)");
}

std::string_view to_string(MaxTfMode mode) {
  return mode == MaxTfMode::kWithinText ? "within" : "literal";
}

WeightConfig parse_weight_config(std::string_view content, const std::string& source) {
  WeightConfig cfg;
  std::string section;
  std::size_t line_no = 0;
  for (auto line : split_lines(content)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(source, line_no, "unterminated section header");
      section = ascii_lower(trim(line.substr(1, line.size() - 2)));
      if (section != "alpha" && section != "general") {
        throw ParseError(source, line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, line_no, "expected 'key = value'");
    const std::string key = ascii_lower(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    try {
      if (section == "alpha") {
        cfg.alpha.insert_or_assign(key, parse_double(value, "alpha"));
      } else if (key == "log_base") {
        cfg.log_base = parse_double(value, "log_base");
      } else if (key == "max_tf_mode") {
        cfg.max_tf_mode = parse_max_tf_mode(value);
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ParseError(source + ": " + e.what());
  }
  return cfg;
}

WeightConfig load_weight_config(const std::string& path) {
  return parse_weight_config(read_file(path), path);
}

}  // namespace faultsim
