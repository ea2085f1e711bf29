#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace kflow {

/// Observation times (strictly increasing) and the d-dimensional states
/// observed at those times, one state per row.
struct TimeSeries {
  Eigen::VectorXd times;
  Eigen::MatrixXd states;

  Eigen::Index size() const noexcept { return states.rows(); }
  Eigen::Index dim() const noexcept { return states.cols(); }

  /// Throws InputError if times/states disagree in length, values are not
  /// finite, or times are not strictly increasing.
  void validate() const;

  /// Rows [first, first + count).
  TimeSeries slice(Eigen::Index first, Eigen::Index count) const;

  /// Gaps t_{k+1} - t_k, length n-1.
  Eigen::VectorXd gaps() const;
};

enum class EmbeddingVariant {
  kRegular,    // X_k = (x_k, ..., x_{k+tau-1}),                    Y_k = x_{k+tau}
  kEuler,      // X_k = x_k,                                        Y_k = (x_{k+1}-x_k)/gap_k
  kIrregular,  // X_k = (x_k, gap_k, ..., x_{k+tau-1}, gap_{k+tau-1}), Y_k = x_{k+tau}
};

std::string_view to_string(EmbeddingVariant v);
EmbeddingVariant parse_variant(std::string_view name);

/// Width of one regression input for a variant, delay and state dimension.
Eigen::Index input_dim(EmbeddingVariant v, int delay, Eigen::Index state_dim);

/// Regression pairs built from a series. For the Euler variant `delay` is 1.
struct EmbeddedDataset {
  EmbeddingVariant variant = EmbeddingVariant::kRegular;
  int delay = 1;
  Eigen::MatrixXd inputs;   // N x p
  Eigen::MatrixXd targets;  // N x d

  Eigen::Index size() const noexcept { return inputs.rows(); }
};

EmbeddedDataset embed_regular(const TimeSeries& ts, int delay);
EmbeddedDataset embed_irregular(const TimeSeries& ts, int delay);
EmbeddedDataset embed_euler(const TimeSeries& ts);

/// Dispatches on `variant`; `delay` is ignored for kEuler.
EmbeddedDataset embed(const TimeSeries& ts, EmbeddingVariant variant, int delay);

/// One input row from a window of `delay` consecutive states (rows of
/// `window`) and the gaps following each of them. `gaps` is unused for
/// kRegular; for kEuler the window holds a single state.
Eigen::VectorXd embed_window(EmbeddingVariant variant,
                             const Eigen::Ref<const Eigen::MatrixXd>& window,
                             const Eigen::Ref<const Eigen::VectorXd>& gaps);

/// Optional per-column affine map z = (x - offset) / scale fitted on training
/// inputs. Identity unless explicitly enabled.
struct InputScaling {
  Eigen::VectorXd offset;
  Eigen::VectorXd scale;

  bool is_identity() const noexcept { return offset.size() == 0; }

  static InputScaling identity() { return {}; }
  /// Column mean and standard deviation; constant columns keep scale 1.
  static InputScaling standardize(const Eigen::Ref<const Eigen::MatrixXd>& inputs);

  Eigen::MatrixXd apply_rows(const Eigen::Ref<const Eigen::MatrixXd>& inputs) const;
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& input) const;
};

}  // namespace kflow
