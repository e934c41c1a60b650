#pragma once

// Exhaustive search over every partition of a small point set into exactly
// k non-empty groups (restricted growth strings), minimising total squared
// distance to group means.

#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace faultsim::oracle {

struct Partition {
  std::vector<int> labels;  // first-appearance numbering
  double objective = std::numeric_limits<double>::infinity();
};

inline double partition_objective(const Eigen::MatrixXd& pts, const std::vector<int>& labels,
                                  int k) {
  double total = 0;
  for (int c = 0; c < k; ++c) {
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(pts.cols());
    int count = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == c) {
        mean += pts.row(static_cast<Eigen::Index>(i));
        ++count;
      }
    }
    mean /= count;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == c) total += (pts.row(static_cast<Eigen::Index>(i)) - mean).squaredNorm();
    }
  }
  return total;
}

namespace detail {
inline void partitions(const Eigen::MatrixXd& pts, int k, std::vector<int>& labels,
                       std::size_t i, int used, Partition& best) {
  const std::size_t n = labels.size();
  if (i == n) {
    if (used != k) return;
    const double obj = partition_objective(pts, labels, k);
    if (obj < best.objective - 1e-12) best = {labels, obj};
    return;
  }
  if (static_cast<int>(n - i) < k - used) return;
  for (int c = 0; c <= std::min(used, k - 1); ++c) {
    labels[i] = c;
    partitions(pts, k, labels, i + 1, std::max(used, c + 1), best);
  }
}
}  // namespace detail

inline Partition best_partition(const Eigen::MatrixXd& pts, int k) {
  Partition best;
  std::vector<int> labels(static_cast<std::size_t>(pts.rows()), 0);
  detail::partitions(pts, k, labels, 0, 0, best);
  return best;
}

}  // namespace faultsim::oracle
