#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>

#include "qmr/partition.hpp"
#include "qmr/permutation.hpp"

namespace qmr {

/// Matrix of the adjacent transposition (i, i+1), 1 <= i <= k-1, in Young's
/// orthogonal representation of shape lambda. Basis: syt_enumerate order.
/// Symmetric, orthogonal, its own inverse.
Eigen::MatrixXd yor_generator(const Partition& lambda, int i);

/// Matrix of an arbitrary permutation, as the product of yor_generator
/// matrices along the bubble-sort word of sigma. Orthogonal;
/// R(sigma)R(tau) = R(sigma*tau) and R(sigma^-1) = R(sigma)^T.
Eigen::MatrixXd rep_matrix(const Partition& lambda, const Permutation& sigma);

/// Shared cache of representation matrices for one shape. Lookups are
/// guarded; safe for concurrent use.
class YorRep {
  public:
    explicit YorRep(Partition lambda);

    const Partition& shape() const { return lambda_; }
    int dim() const { return dim_; }
    const Eigen::MatrixXd& generator(int i) const;      // s_i = (i, i+1), 1-based i
    Eigen::MatrixXd matrix(const Permutation& sigma) const;  // uncached
    const Eigen::MatrixXd& cached(const Permutation& sigma); // memoized

  private:
    Partition lambda_;
    int dim_;
    std::vector<Eigen::MatrixXd> gens_;
    std::map<std::vector<int>, Eigen::MatrixXd> cache_;
    mutable std::mutex mutex_;
};

}  // namespace qmr
