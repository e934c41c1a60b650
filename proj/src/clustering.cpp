#include "faultsim/clustering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "faultsim/errors.hpp"

namespace faultsim {

namespace {

using Index = Eigen::Index;

bool row_less(const Eigen::MatrixXd& m, Index a, Index b) {
  for (Index c = 0; c < m.cols(); ++c) {
    if (m(a, c) != m(b, c)) return m(a, c) < m(b, c);
  }
  return false;
}

bool row_equal(const Eigen::MatrixXd& m, Index a, Index b) {
  return !row_less(m, a, b) && !row_less(m, b, a);
}

// Rows sorted lexicographically; equal rows keep their relative order.
std::vector<Index> canonical_order(const Eigen::MatrixXd& points) {
  std::vector<Index> order(static_cast<std::size_t>(points.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return row_less(points, a, b); });
  return order;
}

// Fisher-Yates on raw engine output; std::shuffle and the standard
// distributions are not reproducible across library implementations.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

Eigen::MatrixXd initial_centroids(const Eigen::MatrixXd& points, const std::vector<Index>& order,
                                  std::size_t k, std::uint64_t seed) {
  std::vector<Index> distinct;
  std::vector<Index> duplicates;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && row_equal(points, order[i], order[i - 1])) {
      duplicates.push_back(order[i]);
    } else {
      distinct.push_back(order[i]);
    }
  }
  seeded_shuffle(distinct, seed);
  distinct.insert(distinct.end(), duplicates.begin(), duplicates.end());
  Eigen::MatrixXd centroids(static_cast<Index>(k), points.cols());
  for (std::size_t c = 0; c < k; ++c) centroids.row(static_cast<Index>(c)) = points.row(distinct[c]);
  return centroids;
}

double squared_distance(const Eigen::MatrixXd& points, Index row, const Eigen::MatrixXd& centroids,
                        Index c) {
  return (points.row(row) - centroids.row(c)).squaredNorm();
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t k, std::size_t max_iter,
                    std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (n == 0) throw DomainError("k-means needs at least one point");
  if (k == 0) throw DomainError("k must be at least 1");
  if (k > n) {
    throw DomainError("k = " + std::to_string(k) + " exceeds the number of points (" +
                      std::to_string(n) + ")");
  }
  if (max_iter == 0) throw DomainError("max_iter must be at least 1");

  const std::vector<Index> order = canonical_order(points);
  KMeansResult result;
  result.centroids = initial_centroids(points, order, k, seed);
  std::vector<std::size_t> labels(n, k);  // k = unassigned

  while (result.iterations < max_iter) {
    ++result.iterations;
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double d = squared_distance(points, static_cast<Index>(i), result.centroids,
                                          static_cast<Index>(c));
        if (d < best) {
          best = d;
          next[i] = c;
        }
      }
    }

    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t label : next) ++sizes[label];
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      // Steal the point farthest from its centroid out of a cluster that can
      // spare one; ties go to the lexicographically smallest point.
      double worst = -1.0;
      Index pick = -1;
      for (Index i : order) {
        const auto from = next[static_cast<std::size_t>(i)];
        if (sizes[from] < 2) continue;
        const double d = squared_distance(points, i, result.centroids, static_cast<Index>(from));
        if (d > worst) {
          worst = d;
          pick = i;
        }
      }
      if (pick < 0 || worst <= 0.0) continue;  // only duplicates left; stays empty
      --sizes[next[static_cast<std::size_t>(pick)]];
      next[static_cast<std::size_t>(pick)] = c;
      sizes[c] = 1;
      result.centroids.row(static_cast<Index>(c)) = points.row(pick);
    }

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(static_cast<Index>(k), points.cols());
    for (std::size_t i = 0; i < n; ++i) sums.row(static_cast<Index>(next[i])) += points.row(static_cast<Index>(i));
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] > 0) {
        result.centroids.row(static_cast<Index>(c)) = sums.row(static_cast<Index>(c)) / static_cast<double>(sizes[c]);
      }
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      objective += squared_distance(points, static_cast<Index>(i), result.centroids, static_cast<Index>(next[i]));
    }
    result.objective_history.push_back(objective);
    result.objective = objective;

    const bool stable = next == labels;
    labels = std::move(next);
    if (stable) {
      result.converged = true;
      break;
    }
  }

  // Relabel by first appearance in row order.
  std::vector<std::size_t> relabel(k, k);
  std::size_t used = 0;
  for (std::size_t label : labels) {
    if (relabel[label] == k) relabel[label] = used++;
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (relabel[c] == k) relabel[c] = used++;
  }
  Eigen::MatrixXd centroids(result.centroids.rows(), result.centroids.cols());
  for (std::size_t c = 0; c < k; ++c) {
    centroids.row(static_cast<Index>(relabel[c])) = result.centroids.row(static_cast<Index>(c));
  }
  result.centroids = std::move(centroids);
  result.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.labels[i] = relabel[labels[i]];
  return result;
}

std::vector<std::string> shared_vocabulary(const std::map<FaultId, TermVector>& vectors) {
  std::set<std::string> terms;
  for (const auto& [id, v] : vectors) {
    for (const auto& [term, w] : v.weights()) terms.insert(term);
  }
  return {terms.begin(), terms.end()};
}

Eigen::MatrixXd to_dense(const std::map<FaultId, TermVector>& vectors,
                         const std::vector<std::string>& vocabulary) {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(static_cast<Index>(vectors.size()),
                                                static_cast<Index>(vocabulary.size()));
  Index row = 0;
  for (const auto& [id, v] : vectors) {
    for (std::size_t c = 0; c < vocabulary.size(); ++c) dense(row, static_cast<Index>(c)) = v.get(vocabulary[c]);
    ++row;
  }
  return dense;
}

ClusterModel kmeans(const std::map<FaultId, TermVector>& vectors, std::size_t k,
                    std::size_t max_iter, std::uint64_t seed) {
  ClusterModel model;
  model.k = k;
  model.vocabulary = shared_vocabulary(vectors);
  KMeansResult r = kmeans(to_dense(vectors, model.vocabulary), k, max_iter, seed);
  std::size_t row = 0;
  for (const auto& [id, v] : vectors) model.assignments.emplace(id, r.labels[row++]);
  model.centroids = std::move(r.centroids);
  model.objective = r.objective;
  model.objective_history = std::move(r.objective_history);
  model.iterations = r.iterations;
  model.converged = r.converged;
  return model;
}

std::string format_cluster_csv(const ClusterModel& model) {
  std::ostringstream out;
  out << "defect_id,cluster\n";
  for (const auto& [id, cluster] : model.assignments) out << id << ',' << cluster << '\n';
  return out.str();
}

}  // namespace faultsim
