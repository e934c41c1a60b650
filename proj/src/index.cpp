#include "faultsim/index.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "faultsim/errors.hpp"
#include "faultsim/text_io.hpp"

namespace faultsim {

namespace {

constexpr std::string_view kMagic = "faultsim-index";
constexpr int kFormatVersion = 1;

std::string canonical_config(const PipelineConfig& config, const IndexOptions& options) {
  std::string out;
  out += "include_attachment\t";
  out += options.include_attachment ? "1\n" : "0\n";
  for (const auto& w : config.stops.words()) out += "stop\t" + w + "\n";
  for (const auto& [k, v] : config.stems.entries()) out += "stem\t" + k + "\t" + v + "\n";
  return out;
}

}  // namespace

TermCounts count_terms(const TokenSeq& tokens) {
  TermCounts counts;
  for (const auto& t : tokens) ++counts[t];
  return counts;
}

CorpusIndex::CorpusIndex(std::map<FaultId, TermCounts> docs, PipelineConfig config,
                         IndexOptions options)
    : docs_(std::move(docs)), config_(std::move(config)), options_(options) {
  if (docs_.empty()) throw DomainError("empty corpus");
  config_.validate();
  for (const auto& [id, counts] : docs_) {
    for (const auto& [term, tf] : counts) {
      if (tf == 0) {
        throw DomainError("document " + std::to_string(id) + " stores a zero count for '" +
                          term + "'");
      }
      ++doc_freq_[term];
    }
  }
}

std::size_t CorpusIndex::document_frequency(std::string_view term) const {
  auto it = doc_freq_.find(term);
  return it == doc_freq_.end() ? 0 : it->second;
}

bool CorpusIndex::contains_term(std::string_view term) const {
  return doc_freq_.find(term) != doc_freq_.end();
}

std::vector<std::string> CorpusIndex::vocabulary() const {
  std::vector<std::string> terms;
  terms.reserve(doc_freq_.size());
  for (const auto& [term, n] : doc_freq_) terms.push_back(term);
  return terms;
}

std::vector<FaultId> CorpusIndex::ids() const {
  std::vector<FaultId> out;
  out.reserve(docs_.size());
  for (const auto& [id, counts] : docs_) out.push_back(id);
  return out;
}

const TermCounts& CorpusIndex::document_tokens(FaultId id) const {
  auto it = docs_.find(id);
  if (it == docs_.end()) throw NotFoundError("fault id " + std::to_string(id) + " not indexed");
  return it->second;
}

TermCounts CorpusIndex::count_terms(std::string_view raw) const {
  return faultsim::count_terms(normalize(raw, config_));
}

CorpusIndex build_index(const std::vector<FaultRecord>& records, const PipelineConfig& config,
                        IndexOptions options) {
  if (records.empty()) throw DomainError("empty corpus");
  config.validate();
  std::map<FaultId, TermCounts> docs;
  for (const auto& r : records) {
    std::string text;
    if (options.include_attachment) {
      text = r.attachment;
      text += ' ';
    }
    text += r.characteristics;
    auto [it, inserted] = docs.emplace(r.id, count_terms(normalize(text, config)));
    if (!inserted) throw DomainError("duplicate defect id " + std::to_string(r.id));
  }
  return CorpusIndex(std::move(docs), config, options);
}

std::vector<FaultRecord> parse_fault_db(std::string_view content, const std::string& source) {
  const auto lines = split_lines(content);
  if (lines.empty()) throw ParseError(source, 1, "missing header");
  const auto header = split(lines.front(), '\t');
  if (header.size() != 3 || trim(header[0]) != "attachment" || trim(header[1]) != "defect_id" ||
      trim(header[2]) != "characteristics") {
    throw ParseError(source, 1, "expected header 'attachment<TAB>defect_id<TAB>characteristics'");
  }
  std::vector<FaultRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (trim(lines[i]).empty()) continue;
    const auto fields = split(lines[i], '\t');
    if (fields.size() != 3) {
      throw ParseError(source, line_no,
                       "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    }
    FaultRecord r;
    r.attachment = std::string(trim(fields[0]));
    try {
      r.id = parse_int(fields[1], "defect_id");
    } catch (const ParseError& e) {
      throw ParseError(source, line_no, e.what());
    }
    r.characteristics = std::string(trim(fields[2]));
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<FaultRecord> load_fault_db(const std::string& path) {
  return parse_fault_db(read_file(path), path);
}

std::string config_hash(const PipelineConfig& config, const IndexOptions& options) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_config(config, options)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize_index(const CorpusIndex& index) {
  std::ostringstream out;
  out << kMagic << '\t' << kFormatVersion << '\n';
  out << "config_hash\t" << config_hash(index.pipeline(), index.options()) << '\n';
  out << canonical_config(index.pipeline(), index.options());
  out << "n_docs\t" << index.doc_count() << '\n';
  for (const auto& [term, n] : index.doc_freq()) out << "df\t" << term << '\t' << n << '\n';
  for (const auto& [id, counts] : index.docs()) {
    out << "doc\t" << id << '\t';
    bool first = true;
    for (const auto& [term, tf] : counts) {
      if (!first) out << ' ';
      out << term << ':' << tf;
      first = false;
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

CorpusIndex parse_index(std::string_view content, const std::string& source) {
  const auto lines = split_lines(content);
  auto fail = [&](std::size_t line_no, const std::string& what) -> ParseError {
    return ParseError(source, line_no, what);
  };
  if (lines.empty()) throw fail(1, "empty index file");
  {
    const auto magic = split(lines[0], '\t');
    if (magic.size() != 2 || magic[0] != kMagic) throw fail(1, "not a faultsim index");
    if (parse_int(magic[1], "format version") != kFormatVersion) {
      throw fail(1, "unsupported index format version " + std::string(magic[1]));
    }
  }

  std::string stored_hash;
  PipelineConfig config;
  IndexOptions options;
  std::size_t n_docs = 0;
  bool have_n_docs = false;
  bool ended = false;
  std::map<std::string, std::size_t, std::less<>> stored_df;
  std::map<FaultId, TermCounts> docs;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (ended) throw fail(line_no, "content after 'end'");
    const auto f = split(lines[i], '\t');
    try {
      if (f[0] == "config_hash" && f.size() == 2) {
        stored_hash = std::string(f[1]);
      } else if (f[0] == "include_attachment" && f.size() == 2) {
        options.include_attachment = parse_int(f[1], "include_attachment") != 0;
      } else if (f[0] == "stop" && f.size() == 2) {
        config.stops.insert(std::string(f[1]));
      } else if (f[0] == "stem" && f.size() == 3) {
        config.stems.insert(std::string(f[1]), std::string(f[2]));
      } else if (f[0] == "n_docs" && f.size() == 2) {
        n_docs = static_cast<std::size_t>(parse_int(f[1], "n_docs"));
        have_n_docs = true;
      } else if (f[0] == "df" && f.size() == 3) {
        stored_df[std::string(f[1])] = static_cast<std::size_t>(parse_int(f[2], "df"));
      } else if (f[0] == "doc" && f.size() == 3) {
        const FaultId id = parse_int(f[1], "doc id");
        TermCounts counts;
        if (!f[2].empty()) {
          for (auto entry : split(f[2], ' ')) {
            const auto colon = entry.rfind(':');
            if (colon == std::string_view::npos || colon == 0) {
              throw fail(line_no, "malformed term count '" + std::string(entry) + "'");
            }
            const auto tf = parse_int(entry.substr(colon + 1), "term count");
            if (tf <= 0) throw fail(line_no, "non-positive term count");
            counts.emplace(std::string(entry.substr(0, colon)), static_cast<std::size_t>(tf));
          }
        }
        if (!docs.emplace(id, std::move(counts)).second) {
          throw fail(line_no, "duplicate doc id " + std::to_string(id));
        }
      } else if (f[0] == "end" && f.size() == 1) {
        ended = true;
      } else {
        throw fail(line_no, "unrecognised record '" + std::string(f[0]) + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw fail(line_no, e.what());
    } catch (const ConfigError& e) {
      throw fail(line_no, e.what());
    }
  }
  if (!ended) throw fail(lines.size(), "missing 'end' (truncated file?)");
  if (!have_n_docs || n_docs != docs.size()) {
    throw ParseError(source + ": n_docs does not match the number of doc records");
  }
  if (stored_hash != config_hash(config, options)) {
    throw ParseError(source + ": config_hash does not match the stored pipeline configuration");
  }
  CorpusIndex index(std::move(docs), std::move(config), options);
  if (index.doc_freq() != stored_df) {
    throw ParseError(source + ": df records disagree with the documents");
  }
  return index;
}

}  // namespace faultsim
