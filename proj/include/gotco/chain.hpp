#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace gotco {

/// Closed communicating classes of the positive-probability digraph of a
/// row-stochastic matrix, each listed in ascending state order.
std::vector<std::vector<std::size_t>> recurrent_classes(const Eigen::MatrixXd& transition);

/// True iff the chain has exactly one recurrent class.
bool is_unichain(const Eigen::MatrixXd& transition);

/// Stationary distribution of a unichain chain, by a direct linear solve of
/// μ(P − I) = 0 with Σμ = 1. Throws NotUnichainError otherwise.
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& transition);

}  // namespace gotco
