#pragma once

#include <vector>

#include <Eigen/Dense>

#include "kflow/embedding.hpp"
#include "kflow/interpolant.hpp"

namespace kflow {

/// A fitted regressor together with the embedding it was trained on.
struct Surrogate {
  FittedModel model;
  EmbeddingVariant variant = EmbeddingVariant::kRegular;
  int delay = 1;
  InputScaling scaling;

  /// One model step from raw (unscaled) input.
  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& raw_input) const;
};

/// Embeds `train` for `variant`, optionally standardizes the inputs, and fits.
Surrogate fit_surrogate(const KernelParams& p, const TimeSeries& train, EmbeddingVariant variant,
                        int delay, double nugget, SolverPolicy policy, bool standardize);

struct ForecastConfig {
  int horizon = 1;  // h
  int delay = 1;    // tau; 1 for the Euler variant
  EmbeddingVariant variant = EmbeddingVariant::kRegular;

  void validate() const;
};

struct ForecastResult {
  Eigen::MatrixXd predicted;            // scored rows only
  Eigen::MatrixXd actual;               // matching ground truth
  std::vector<Eigen::Index> indices;    // test-series index of each scored row
  std::vector<Eigen::Index> chunk_boundaries;  // first index of each chunk
  std::vector<bool> divergent;          // per scored row: filled after a blow-up
  int divergent_chunks = 0;

  Eigen::Index scored() const noexcept { return predicted.rows(); }
  int divergent_rows() const;
};

/// Splits `test` into consecutive chunks of h + tau samples. Each chunk is
/// seeded with its first tau true states; the remaining states are predicted
/// recursively from the model's own outputs, with future gaps taken from the
/// test timestamps (Irregular and Euler). A trailing chunk with at least
/// tau + 1 samples is forecast over what it has; shorter remainders are
/// dropped. A non-finite step marks the chunk divergent and repeats the last
/// finite prediction for the rest of it.
ForecastResult forecast_chunked(const Surrogate& s, const TimeSeries& test,
                                const ForecastConfig& cfg);

}  // namespace kflow
