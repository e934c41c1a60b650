#include "faultsim/cli.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "faultsim/clustering.hpp"
#include "faultsim/edit_distance.hpp"
#include "faultsim/errors.hpp"
#include "faultsim/index.hpp"
#include "faultsim/pagerank.hpp"
#include "faultsim/similarity.hpp"
#include "faultsim/text_io.hpp"
#include "faultsim/text_pipeline.hpp"

namespace faultsim::cli {

namespace {

struct IndexArgs {
  std::string db;
  std::string out;
  std::string stopwords;
  std::string stems;
  bool no_attachment = false;
};

struct WeightArgs {
  std::string weights;
  std::string max_tf_mode;
};

struct QueryArgs {
  std::string index;
  std::string text;
  std::size_t top_k = 10;
  std::string format = "table";
  WeightArgs weight;
};

struct DistanceArgs {
  std::string metric;
  std::string s;
  std::string t;
  std::string costs;
  EditWeights weights;
};

struct PageRankArgs {
  std::string edges;
  double tol = 1e-10;
  std::size_t max_iter = 100;
  std::optional<double> damping;
};

struct ClusterArgs {
  std::string index;
  std::size_t k = 2;
  std::uint64_t seed = 42;
  std::size_t max_iter = 100;
  WeightArgs weight;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

int percent_of(double score) { return static_cast<int>(std::lround(score * 100.0)); }

WeightConfig load_weights(const WeightArgs& a) {
  WeightConfig cfg = a.weights.empty() ? WeightConfig{} : load_weight_config(a.weights);
  if (!a.max_tf_mode.empty()) cfg.max_tf_mode = parse_max_tf_mode(a.max_tf_mode);
  return cfg;
}

void cmd_index(const IndexArgs& a, std::ostream& out) {
  PipelineConfig config{a.stopwords.empty() ? default_stop_list() : load_stop_list(a.stopwords),
                        a.stems.empty() ? default_stem_table() : load_stem_table(a.stems)};
  const auto records = load_fault_db(a.db);
  const CorpusIndex index =
      build_index(records, config, IndexOptions{.include_attachment = !a.no_attachment});
  write_file(a.out, serialize_index(index));
  out << "indexed " << index.doc_count() << " entries, " << index.doc_freq().size()
      << " terms -> " << a.out << '\n';
}

void write_report(const std::vector<SimilarityResult>& results, const std::string& format,
                  std::ostream& out) {
  if (format == "jsonl") {
    for (const auto& r : results) {
      nlohmann::ordered_json line;
      line["id"] = r.id;
      line["score"] = r.score;
      line["percent"] = percent_of(r.score);
      out << line.dump() << '\n';
    }
  } else if (format == "bars") {
    constexpr int kWidth = 50;
    for (const auto& r : results) {
      const int pct = percent_of(r.score);
      const int filled = static_cast<int>(std::lround(r.score * kWidth));
      out << std::setw(6) << r.id << " |" << std::string(static_cast<std::size_t>(filled), '#')
          << std::string(static_cast<std::size_t>(kWidth - filled), ' ') << "| " << std::setw(3)
          << pct << "%\n";
    }
  } else {
    out << "rank      id     score  percent\n";
    std::size_t rank = 0;
    for (const auto& r : results) {
      out << std::setw(4) << ++rank << "  " << std::setw(6) << r.id << "  " << std::fixed
          << std::setprecision(6) << r.score << std::defaultfloat << "  " << std::setw(6)
          << percent_of(r.score) << "%\n";
    }
  }
}

void cmd_query(const QueryArgs& a, std::ostream& out, std::ostream& err) {
  const CorpusIndex index = parse_index(read_file(a.index), a.index);
  const auto results = rank_query(a.text, index, load_weights(a.weight), a.top_k);
  if (results.empty()) {
    err << "warning: query carries no weight after normalisation (no indexed terms); "
           "nothing matched\n";
  }
  write_report(results, a.format, out);
}

std::string format_number(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

void cmd_distance(const DistanceArgs& a, std::ostream& out) {
  if (a.metric == "levenshtein") {
    out << levenshtein(a.s, a.t) << '\n';
  } else if (a.metric == "damerau") {
    out << damerau_levenshtein(a.s, a.t) << '\n';
  } else if (a.metric == "hamming") {
    out << hamming(a.s, a.t) << '\n';
  } else if (a.metric == "weighted") {
    out << format_number(weighted_edit(a.s, a.t, a.weights)) << '\n';
  } else if (a.metric == "nw") {
    if (a.costs.empty()) throw UsageError("metric 'nw' requires --costs FILE");
    out << format_number(needleman_wunsch(a.s, a.t, load_cost_matrix(a.costs))) << '\n';
  } else {
    throw UsageError("unknown metric '" + a.metric + "'");
  }
}

void cmd_pagerank(const PageRankArgs& a, std::ostream& out, std::ostream& err) {
  const PageGraph g = load_edge_list(a.edges);
  PageRankOptions opts{a.damping};
  PageRankResult result;
  if (a.max_iter == 0) {
    result.ranks = init_ranks(g);
    result.converged = false;
  } else {
    result = pagerank_solve(g, a.tol, a.max_iter, opts);
  }
  out << "node,rank\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << g.nodes()[i] << ',' << format_number(result.ranks.ranks(static_cast<Eigen::Index>(i)))
        << '\n';
  }
  err << "iterations=" << result.iterations << " converged=" << (result.converged ? "yes" : "no")
      << " max_change=" << format_number(result.last_change) << '\n';
  if (a.max_iter > 0 && !result.converged) {
    err << "warning: did not converge within " << a.max_iter << " iterations (tol " << a.tol
        << "); ranks are the last iterate\n";
  }
}

void cmd_cluster(const ClusterArgs& a, std::ostream& out, std::ostream& err) {
  const CorpusIndex index = parse_index(read_file(a.index), a.index);
  const ClusterModel model =
      kmeans(vectorize_corpus(index, load_weights(a.weight)), a.k, a.max_iter, a.seed);
  out << format_cluster_csv(model);
  err << "k=" << model.k << " iterations=" << model.iterations
      << " converged=" << (model.converged ? "yes" : "no")
      << " objective=" << format_number(model.objective) << '\n';
}

void add_weight_flags(CLI::App* cmd, WeightArgs& w) {
  cmd->add_option("--weights", w.weights, "Weight config file (log_base, max_tf_mode, [alpha])");
  cmd->add_option("--max-tf-mode", w.max_tf_mode, "max_tf reading: within|literal")
      ->check(CLI::IsMember({"within", "literal"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"faultsim: fault-symptom similarity matching and reference string/graph metrics",
               "faultsim"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  IndexArgs ia;
  auto* index_cmd = app.add_subcommand("index", "Build an index from a fault database TSV");
  index_cmd->add_option("db", ia.db, "Fault database TSV")->required();
  index_cmd->add_option("-o,--out", ia.out, "Index output path")->required();
  index_cmd->add_option("--stopwords", ia.stopwords, "Stop list file (default: built-in)");
  index_cmd->add_option("--stems", ia.stems, "Stem table file (default: built-in)");
  index_cmd->add_flag("--no-attachment", ia.no_attachment, "Ignore the attachment column");

  QueryArgs qa;
  auto* query_cmd = app.add_subcommand("query", "Rank indexed faults against a symptom");
  query_cmd->add_option("index", qa.index, "Index file")->required();
  query_cmd->add_option("text", qa.text, "Fault symptom text")->required();
  query_cmd->add_option("--top-k", qa.top_k, "Maximum results")->check(CLI::PositiveNumber);
  query_cmd->add_option("--format", qa.format, "jsonl|table|bars")
      ->check(CLI::IsMember({"jsonl", "table", "bars"}));
  add_weight_flags(query_cmd, qa.weight);

  DistanceArgs da;
  auto* dist_cmd = app.add_subcommand("distance", "String distance between two strings");
  dist_cmd->add_option("metric", da.metric, "levenshtein|damerau|nw|hamming|weighted")
      ->required()
      ->check(CLI::IsMember({"levenshtein", "damerau", "nw", "hamming", "weighted"}));
  dist_cmd->add_option("s", da.s, "Source string")->required();
  dist_cmd->add_option("t", da.t, "Target string")->required();
  dist_cmd->add_option("--costs", da.costs, "Cost matrix TSV (metric nw)");
  dist_cmd->add_option("--w-insert", da.weights.insert, "Insertion weight (metric weighted)");
  dist_cmd->add_option("--w-delete", da.weights.remove, "Deletion weight (metric weighted)");
  dist_cmd->add_option("--w-substitute", da.weights.substitute,
                       "Substitution weight (metric weighted)");

  PageRankArgs pa;
  auto* pr_cmd = app.add_subcommand("pagerank", "PageRank of an edge-list graph");
  pr_cmd->add_option("edges", pa.edges, "Edge list TSV")->required();
  pr_cmd->add_option("--tol", pa.tol, "Convergence tolerance (max per-node change)");
  pr_cmd->add_option("--max-iter", pa.max_iter, "Iteration cap; 0 prints the initial ranks");
  pr_cmd->add_option("--damping", pa.damping, "Optional damping factor in [0,1]")
      ->check(CLI::Range(0.0, 1.0));

  ClusterArgs ca;
  auto* cluster_cmd = app.add_subcommand("cluster", "k-means over indexed term vectors");
  cluster_cmd->add_option("index", ca.index, "Index file")->required();
  cluster_cmd->add_option("-k,--k", ca.k, "Cluster count")->check(CLI::PositiveNumber);
  cluster_cmd->add_option("--seed", ca.seed, "Seed for initial centroids");
  cluster_cmd->add_option("--max-iter", ca.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  add_weight_flags(cluster_cmd, ca.weight);

  std::vector<std::string> argv_store{"faultsim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run 'faultsim --help' for usage\n";
    return kUsage;
  }

  try {
    if (index_cmd->parsed()) cmd_index(ia, out);
    if (query_cmd->parsed()) cmd_query(qa, out, err);
    if (dist_cmd->parsed()) cmd_distance(da, out);
    if (pr_cmd->parsed()) cmd_pagerank(pa, out, err);
    if (cluster_cmd->parsed()) cmd_cluster(ca, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace faultsim::cli
