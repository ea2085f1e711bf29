#pragma once

#include <Eigen/Dense>

#include "kflow/kernel.hpp"
#include "kflow/linalg.hpp"

namespace kflow {

/// Default nugget added to the Gram diagonal.
inline constexpr double kDefaultNugget = 1e-6;

/// Kernel ridge regressor f(x) = K(x,X) (K(X,X) + lambda I)^{-1} Y with the
/// factorized system kept for error bounds and incremental extension.
/// Immutable once built; extend() returns a new model.
class FittedModel {
 public:
  const KernelParams& params() const noexcept { return params_; }
  const Eigen::MatrixXd& train_inputs() const noexcept { return inputs_; }
  const Eigen::MatrixXd& train_targets() const noexcept { return targets_; }
  double nugget() const noexcept { return nugget_; }
  SolverPolicy policy() const noexcept { return policy_; }
  const SystemFactor& factor() const noexcept { return factor_; }
  /// C = (K + lambda I)^{-1} Y, N x d.
  const Eigen::MatrixXd& coeffs() const noexcept { return coeffs_; }

  Eigen::Index size() const noexcept { return inputs_.rows(); }
  Eigen::Index input_dim() const noexcept { return inputs_.cols(); }
  Eigen::Index output_dim() const noexcept { return targets_.cols(); }

  /// Lower Cholesky factor; throws NumericError when the model was fitted
  /// through the LU fallback.
  const Eigen::MatrixXd& chol_factor() const { return factor_.lower(); }

 private:
  friend FittedModel fit(const KernelParams&, const Eigen::Ref<const Eigen::MatrixXd>&,
                         const Eigen::Ref<const Eigen::MatrixXd>&, double, SolverPolicy);
  friend FittedModel extend(const FittedModel&, const Eigen::Ref<const Eigen::MatrixXd>&,
                            const Eigen::Ref<const Eigen::MatrixXd>&);

  FittedModel(KernelParams p, Eigen::MatrixXd x, Eigen::MatrixXd y, double nugget,
              SolverPolicy policy, SystemFactor factor, Eigen::MatrixXd coeffs)
      : params_(p), inputs_(std::move(x)), targets_(std::move(y)), nugget_(nugget),
        policy_(policy), factor_(std::move(factor)), coeffs_(std::move(coeffs)) {}

  KernelParams params_;
  Eigen::MatrixXd inputs_;
  Eigen::MatrixXd targets_;
  double nugget_;
  SolverPolicy policy_;
  SystemFactor factor_;
  Eigen::MatrixXd coeffs_;
};

/// Fits on rows X (N x p) and targets Y (N x d). Throws FitError when the
/// factorization fails under `policy`, InputError on shape problems.
FittedModel fit(const KernelParams& p, const Eigen::Ref<const Eigen::MatrixXd>& X,
                const Eigen::Ref<const Eigen::MatrixXd>& Y, double nugget = kDefaultNugget,
                SolverPolicy policy = SolverPolicy::kCholesky);

/// K(x,X) C.
Eigen::VectorXd predict(const FittedModel& m, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Row-wise predict for a batch of query points.
Eigen::MatrixXd predict_rows(const FittedModel& m, const Eigen::Ref<const Eigen::MatrixXd>& Xq);

/// sigma(x) = sqrt(max(0, K(x,x) - K(x,X)(K+lambda I)^{-1}K(X,x))). Paired with
/// the RKHS norm of the target it bounds the pointwise interpolation error.
double error_bound(const FittedModel& m, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Adds training rows without refactorizing the existing block: the Cholesky
/// factor gains block rows from a triangular solve and a factorization of the
/// m x m Schur complement. Models fitted through the LU fallback (or a Schur
/// block that is not positive definite under the fallback policy) are refitted
/// in full.
FittedModel extend(const FittedModel& m, const Eigen::Ref<const Eigen::MatrixXd>& X_new,
                   const Eigen::Ref<const Eigen::MatrixXd>& Y_new);

/// Newton basis v_j(x) = sum_i B_ij K(x, x_i) with B = L^{-T}; the v_j are
/// orthonormal in the inner product induced by K + lambda I.
struct NewtonBasis {
  Eigen::MatrixXd back_transform;  // N x N upper triangular

  /// (v_1(x), ..., v_N(x)) for the model's training points.
  Eigen::RowVectorXd evaluate(const FittedModel& m,
                              const Eigen::Ref<const Eigen::VectorXd>& x) const;
};

/// Requires a Cholesky-backed model.
NewtonBasis newton_basis(const FittedModel& m);

/// Coefficients b = L^T C of the interpolant in the Newton basis, so that
/// predict(m, x) = newton.evaluate(m, x) * b.
Eigen::MatrixXd newton_coefficients(const FittedModel& m);

}  // namespace kflow
