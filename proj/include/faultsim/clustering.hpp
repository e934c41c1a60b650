#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "faultsim/index.hpp"
#include "faultsim/similarity.hpp"

namespace faultsim {

/// Lloyd iteration on the rows of a dense matrix.
struct KMeansResult {
  Eigen::MatrixXd centroids;         // k x dims
  std::vector<std::size_t> labels;   // one per row, in [0, k)
  double objective = 0.0;            // total within-cluster squared distance
  std::vector<double> objective_history;  // objective after each iteration
  std::size_t iterations = 0;
  bool converged = false;            // assignments stabilised before max_iter
};

/// Initial centroids are k distinct rows sampled with `seed` from the rows
/// in lexicographic order, so the resulting partition does not depend on
/// row order. A cluster left empty is reseeded with the point farthest from
/// its centroid. Labels are numbered by first appearance in row order.
/// Throws DomainError for no rows, k == 0, k > rows, or max_iter == 0.
KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t k, std::size_t max_iter,
                    std::uint64_t seed);

struct ClusterModel {
  std::size_t k = 0;
  std::vector<std::string> vocabulary;  // column order of the centroids
  Eigen::MatrixXd centroids;
  std::map<FaultId, std::size_t> assignments;
  double objective = 0.0;
  std::vector<double> objective_history;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Sorted union of the terms of `vectors`.
std::vector<std::string> shared_vocabulary(const std::map<FaultId, TermVector>& vectors);

/// One row per id (ascending), one column per vocabulary term.
Eigen::MatrixXd to_dense(const std::map<FaultId, TermVector>& vectors,
                         const std::vector<std::string>& vocabulary);

/// Clusters term vectors by Euclidean distance over their shared vocabulary.
ClusterModel kmeans(const std::map<FaultId, TermVector>& vectors, std::size_t k,
                    std::size_t max_iter, std::uint64_t seed);

/// `defect_id,cluster` header plus one row per id.
std::string format_cluster_csv(const ClusterModel& model);

}  // namespace faultsim
