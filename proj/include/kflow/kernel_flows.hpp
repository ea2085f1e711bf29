#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kflow/embedding.hpp"
#include "kflow/kernel.hpp"
#include "kflow/linalg.hpp"

namespace kflow {

struct KFConfig {
  int batch_size = 100;  // M, even; the half-batch has M/2 points
  double learning_rate = 0.1;
  int iterations = 1000;
  double nugget = 1e-6;
  std::uint64_t rng_seed = 0;
  SolverPolicy policy = SolverPolicy::kIndefiniteFallback;
  double clip_norm = 1e3;       // gradient l2 norm cap per step
  int smoothing_window = 50;    // moving average used to pick best_params
  double max_skip_fraction = 0.2;

  void validate() const;
};

struct RhoValue {
  double rho;
  Theta gradient;
};

/// Kernel Flows loss
///
///   rho = 1 - sum_c Yb_c^T (K(Xb,Xb) + lambda I)^{-1} Yb_c
///           / sum_c Yp_c^T (K(Xp,Xp) + lambda I)^{-1} Yp_c
///
/// where (Xp, Yp) is the mini-batch and Xb = Xp[half], Yb = Yp[half].
/// Throws NumericError when a factorization fails or the denominator is
/// degenerate: not positive under kCholesky, zero or non-finite under the
/// fallback (an indefinite system can give a negative denominator).
double rho(const KernelParams& p, const Eigen::Ref<const Eigen::MatrixXd>& Xp,
           const Eigen::Ref<const Eigen::MatrixXd>& Yp, std::span<const std::size_t> half,
           double nugget, SolverPolicy policy = SolverPolicy::kCholesky);

/// rho and its analytic gradient in (g0..g4, s0..s5), using
/// d(y^T A^{-1} y) = -(A^{-1}y)^T dK (A^{-1}y).
RhoValue rho_with_gradient(const KernelParams& p, const Eigen::Ref<const Eigen::MatrixXd>& Xp,
                           const Eigen::Ref<const Eigen::MatrixXd>& Yp,
                           std::span<const std::size_t> half, double nugget,
                           SolverPolicy policy = SolverPolicy::kCholesky);

Theta rho_gradient(const KernelParams& p, const Eigen::Ref<const Eigen::MatrixXd>& Xp,
                   const Eigen::Ref<const Eigen::MatrixXd>& Yp, std::span<const std::size_t> half,
                   double nugget, SolverPolicy policy = SolverPolicy::kCholesky);

struct TraceRow {
  int iteration = 0;
  double rho = 0.0;        // NaN for skipped steps
  double grad_norm = 0.0;  // before clipping; NaN for skipped steps
  bool skipped = false;
  std::uint64_t theta_hash = 0;  // of the parameters rho was evaluated at
};

struct TrainTrace {
  std::vector<TraceRow> rows;
  KernelParams initial_params;
  KernelParams best_params;
  KernelParams final_params;
  double best_smoothed_rho = 0.0;  // NaN when nothing was evaluated
  int best_iteration = -1;
  int skipped = 0;
  int rho_out_of_range = 0;  // evaluations with rho outside [0, 1]
};

/// FNV-1a over the bit patterns of the eleven parameters.
std::uint64_t theta_hash(const KernelParams& p);

/// Mini-batch SGD on rho: per iteration, M rows drawn without replacement
/// from the dataset, M/2 of those drawn as the half-batch, then
/// theta <- theta - eta * clip(grad). Failed evaluations are skipped and
/// counted; more than max_skip_fraction skipped raises TrainingError.
/// best_params minimizes the moving average of the rho values that fall in
/// [0, 1]; out-of-range values still drive the update.
/// Deterministic in (data, cfg, init).
TrainTrace train(const EmbeddedDataset& data, const KFConfig& cfg, const KernelParams& init,
                 std::ostream* log = nullptr);

/// Inputs already transformed (e.g. scaled) by the caller.
TrainTrace train(const Eigen::Ref<const Eigen::MatrixXd>& inputs,
                 const Eigen::Ref<const Eigen::MatrixXd>& targets, const KFConfig& cfg,
                 const KernelParams& init, std::ostream* log = nullptr);

/// Each of the eleven parameters i.i.d. U(0,1).
KernelParams random_params(std::uint64_t seed);

}  // namespace kflow
