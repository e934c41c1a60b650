#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace faultsim {

/// Directed link graph over named pages. Immutable after construction.
/// Nodes are kept in sorted order; that order indexes every rank vector.
class PageGraph {
 public:
  using Edge = std::pair<std::string, std::string>;

  /// Throws DomainError if an edge endpoint is not among `nodes`.
  PageGraph(std::vector<std::string> nodes, const std::vector<Edge>& edges);

  /// Node set = every edge endpoint plus `isolated`.
  static PageGraph from_edges(const std::vector<Edge>& edges,
                              const std::vector<std::string>& isolated = {});

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }

  /// Throws NotFoundError.
  std::size_t index_of(std::string_view node) const;

  /// Distinct targets of node `i`, ascending.
  const std::vector<std::size_t>& outlinks(std::size_t i) const { return out_[i]; }
  std::size_t out_degree(std::size_t i) const { return out_[i].size(); }
  bool is_dangling(std::size_t i) const { return out_[i].empty(); }

  /// Column-stochastic link matrix without dangling columns:
  /// M(i, j) = 1 / L(j) for every link j -> i.
  const Eigen::SparseMatrix<double>& transition() const noexcept { return transition_; }

 private:
  std::vector<std::string> nodes_;
  std::vector<std::vector<std::size_t>> out_;
  Eigen::SparseMatrix<double> transition_;
};

/// Probability distribution over the nodes of a graph (same order).
struct RankVector {
  std::vector<std::string> nodes;
  Eigen::VectorXd ranks;

  /// Throws NotFoundError.
  double operator[](std::string_view node) const;
};

struct PageRankOptions {
  /// Absent: the plain recurrence PR(i) = sum_j PR(j) / L(j). Present: the
  /// damped form d * (...) + (1 - d) / n. Must lie in [0, 1].
  std::optional<double> damping;
};

/// Uniform 1/n. Throws DomainError on an empty graph.
RankVector init_ranks(const PageGraph& g);

/// One application of the recurrence. Each page splits its rank evenly over
/// its outlinks; a page without outlinks splits it evenly over all pages.
RankVector pagerank_step(const PageGraph& g, const RankVector& r, const PageRankOptions& opts = {});

/// Votes node `target` receives from each inbound neighbour: r(j) / L(j).
std::vector<std::pair<std::string, double>> inbound_votes(const PageGraph& g, const RankVector& r,
                                                          std::string_view target);

struct PageRankResult {
  RankVector ranks;
  std::size_t iterations = 0;
  bool converged = false;
  /// Largest per-node change in the final iteration.
  double last_change = 0.0;
};

/// Iterates from init_ranks until the largest per-node change drops below
/// `tol` or `max_iter` steps ran. Non-convergence is reported through
/// `converged`, never thrown. Throws DomainError for tol <= 0 or max_iter 0.
PageRankResult pagerank_solve(const PageGraph& g, double tol, std::size_t max_iter,
                              const PageRankOptions& opts = {});

/// `source<TAB>target` per line; `node<TAB>` declares a node with no
/// outlinks. '#' comments allowed.
PageGraph parse_edge_list(std::string_view content, const std::string& source = "<edges>");
PageGraph load_edge_list(const std::string& path);

}  // namespace faultsim
