#pragma once

#include <Eigen/Dense>

namespace kflow {

struct ScoreReport {
  double mse = 0.0;
  double r2 = 0.0;
  Eigen::Index n_scored = 0;
  int n_divergent = 0;
};

/// MSE = mean_i ||x_i - xhat_i||^2 and
/// R^2 = 1 - sum_i ||x_i - xhat_i||^2 / sum_i ||x_i - xbar||^2 over full state
/// vectors, xbar the mean of `actual`. Throws InputError on shape mismatch or
/// fewer than two rows, MetricError when `actual` has zero variance.
ScoreReport score(const Eigen::Ref<const Eigen::MatrixXd>& predicted,
                  const Eigen::Ref<const Eigen::MatrixXd>& actual, int n_divergent = 0);

}  // namespace kflow
