#include "faultsim/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "faultsim/errors.hpp"
#include "faultsim/text_io.hpp"

namespace faultsim {

PageGraph::PageGraph(std::vector<std::string> nodes, const std::vector<Edge>& edges)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  out_.resize(nodes_.size());
  for (const auto& [from, to] : edges) {
    const auto lookup = [&](const std::string& n) {
      auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
      if (it == nodes_.end() || *it != n) {
        throw DomainError("edge " + from + " -> " + to + " names unknown node '" + n + "'");
      }
      return static_cast<std::size_t>(it - nodes_.begin());
    };
    out_[lookup(from)].push_back(lookup(to));
  }
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t j = 0; j < out_.size(); ++j) {
    auto& targets = out_[j];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t i : targets) {
      triplets.emplace_back(static_cast<int>(i), static_cast<int>(j),
                            1.0 / static_cast<double>(targets.size()));
    }
  }
  const auto n = static_cast<Eigen::Index>(nodes_.size());
  transition_.resize(n, n);
  transition_.setFromTriplets(triplets.begin(), triplets.end());
}

PageGraph PageGraph::from_edges(const std::vector<Edge>& edges,
                                const std::vector<std::string>& isolated) {
  std::vector<std::string> nodes(isolated);
  for (const auto& [from, to] : edges) {
    nodes.push_back(from);
    nodes.push_back(to);
  }
  return PageGraph(std::move(nodes), edges);
}

std::size_t PageGraph::index_of(std::string_view node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) {
    throw NotFoundError("no page named '" + std::string(node) + "'");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

double RankVector::operator[](std::string_view node) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
  if (it == nodes.end() || *it != node) {
    throw NotFoundError("no page named '" + std::string(node) + "'");
  }
  return ranks(it - nodes.begin());
}

RankVector init_ranks(const PageGraph& g) {
  if (g.empty()) throw DomainError("cannot rank an empty graph");
  const auto n = static_cast<Eigen::Index>(g.size());
  return {g.nodes(), Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n))};
}

RankVector pagerank_step(const PageGraph& g, const RankVector& r, const PageRankOptions& opts) {
  if (g.empty()) throw DomainError("cannot rank an empty graph");
  if (r.ranks.size() != static_cast<Eigen::Index>(g.size())) {
    throw DomainError("rank vector does not match the graph");
  }
  const double n = static_cast<double>(g.size());
  double dangling_mass = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g.is_dangling(j)) dangling_mass += r.ranks(static_cast<Eigen::Index>(j));
  }
  Eigen::VectorXd next = g.transition() * r.ranks;
  next.array() += dangling_mass / n;
  if (opts.damping) {
    const double d = *opts.damping;
    if (!(d >= 0.0 && d <= 1.0)) throw DomainError("damping must lie in [0, 1]");
    next = d * next;
    next.array() += (1.0 - d) / n;
  }
  return {g.nodes(), std::move(next)};
}

std::vector<std::pair<std::string, double>> inbound_votes(const PageGraph& g, const RankVector& r,
                                                          std::string_view target) {
  const std::size_t t = g.index_of(target);
  std::vector<std::pair<std::string, double>> votes;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto& out = g.outlinks(j);
    if (std::binary_search(out.begin(), out.end(), t)) {
      votes.emplace_back(g.nodes()[j],
                         r.ranks(static_cast<Eigen::Index>(j)) / static_cast<double>(out.size()));
    }
  }
  return votes;
}

PageRankResult pagerank_solve(const PageGraph& g, double tol, std::size_t max_iter,
                              const PageRankOptions& opts) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iter == 0) throw DomainError("max_iter must be at least 1");
  PageRankResult result{init_ranks(g)};
  while (result.iterations < max_iter) {
    RankVector next = pagerank_step(g, result.ranks, opts);
    result.last_change = (next.ranks - result.ranks.ranks).cwiseAbs().maxCoeff();
    result.ranks = std::move(next);
    ++result.iterations;
    if (result.last_change < tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

PageGraph parse_edge_list(std::string_view content, const std::string& source) {
  std::vector<PageGraph::Edge> edges;
  std::vector<std::string> isolated;
  std::size_t line_no = 0;
  for (auto line : split_lines(content)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto f = split(line, '\t');
    if (f.size() != 2 || trim(f[0]).empty()) {
      throw ParseError(source, line_no, "expected 'source<TAB>target' or 'node<TAB>'");
    }
    if (trim(f[1]).empty()) {
      isolated.emplace_back(trim(f[0]));
    } else {
      edges.emplace_back(std::string(trim(f[0])), std::string(trim(f[1])));
    }
  }
  return PageGraph::from_edges(edges, isolated);
}

PageGraph load_edge_list(const std::string& path) { return parse_edge_list(read_file(path), path); }

}  // namespace faultsim
