#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "faultsim/text_pipeline.hpp"

namespace faultsim {

using FaultId = std::int64_t;

/// Term -> number of occurrences in one text.
using TermCounts = std::map<std::string, std::size_t, std::less<>>;

/// One row of the fault database.
struct FaultRecord {
  FaultId id = 0;
  std::string attachment;
  std::string characteristics;

  friend bool operator==(const FaultRecord&, const FaultRecord&) = default;
};

struct IndexOptions {
  /// Index the attachment text together with the characteristics.
  bool include_attachment = true;

  friend bool operator==(const IndexOptions&, const IndexOptions&) = default;
};

/// Corpus statistics consumed by the term-weighting function: the entry
/// count N, per-term document frequencies and per-entry term counts.
/// Immutable once built.
class CorpusIndex {
 public:
  /// Builds from already-normalised documents. Throws DomainError on an
  /// empty corpus.
  CorpusIndex(std::map<FaultId, TermCounts> docs, PipelineConfig config, IndexOptions options);

  std::size_t doc_count() const noexcept { return docs_.size(); }

  /// n_i; zero for terms outside the vocabulary.
  std::size_t document_frequency(std::string_view term) const;
  bool contains_term(std::string_view term) const;

  const std::map<std::string, std::size_t, std::less<>>& doc_freq() const noexcept {
    return doc_freq_;
  }
  const std::map<FaultId, TermCounts>& docs() const noexcept { return docs_; }
  std::vector<std::string> vocabulary() const;
  std::vector<FaultId> ids() const;

  /// Throws NotFoundError for an unknown id.
  const TermCounts& document_tokens(FaultId id) const;

  const PipelineConfig& pipeline() const noexcept { return config_; }
  const IndexOptions& options() const noexcept { return options_; }

  /// Runs `raw` through the pipeline this index was built with.
  TermCounts count_terms(std::string_view raw) const;

  friend bool operator==(const CorpusIndex&, const CorpusIndex&) = default;

 private:
  std::map<FaultId, TermCounts> docs_;
  std::map<std::string, std::size_t, std::less<>> doc_freq_;
  PipelineConfig config_;
  IndexOptions options_;
};

TermCounts count_terms(const TokenSeq& tokens);

/// Normalises each record (attachment text, then characteristics) and
/// collects corpus statistics. Throws DomainError naming a duplicate id, or
/// "empty corpus" for no records.
CorpusIndex build_index(const std::vector<FaultRecord>& records, const PipelineConfig& config,
                        IndexOptions options = {});

/// Fault database TSV with header `attachment<TAB>defect_id<TAB>characteristics`.
std::vector<FaultRecord> parse_fault_db(std::string_view content,
                                        const std::string& source = "<faults>");
std::vector<FaultRecord> load_fault_db(const std::string& path);

/// Versioned text serialisation. Output is byte-stable for equal indexes.
std::string serialize_index(const CorpusIndex& index);
CorpusIndex parse_index(std::string_view content, const std::string& source = "<index>");

/// 64-bit FNV-1a of the canonical pipeline description, as 16 hex digits.
std::string config_hash(const PipelineConfig& config, const IndexOptions& options);

}  // namespace faultsim
