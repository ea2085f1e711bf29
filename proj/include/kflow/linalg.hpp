#pragma once

#include <optional>

#include <Eigen/Dense>

namespace kflow {

/// How symmetric systems (K + lambda*I) are factorized.
///
/// kCholesky: Cholesky only; a non-positive pivot raises FitError.
/// kIndefiniteFallback: Cholesky first, partial-pivot LU when the matrix is
///   not positive definite. The quadratic kernel term makes K indefinite for
///   most parameter draws on unscaled data, so the experiment pipeline uses
///   this policy.
enum class SolverPolicy { kCholesky, kIndefiniteFallback };

/// Lower Cholesky factor of a symmetric matrix (only the lower triangle of
/// `a` is read). Blocked, right-looking. Throws FitError carrying the
/// zero-based index of the first non-positive pivot.
Eigen::MatrixXd cholesky_lower(const Eigen::Ref<const Eigen::MatrixXd>& a);

/// Extends a lower Cholesky factor by a block of rows:
///
///   [A11 A21^T]   [L11  0 ] [L11  0 ]^T
///   [A21 A22  ] = [L21 L22] [L21 L22]
///
/// given L11, A21 (m x N) and A22 (m x m, lower triangle read). The old factor
/// is copied unchanged into the top-left block. Costs O(N^2 m + m^3). Throws
/// FitError (pivot index offset by N) if the Schur complement is not positive
/// definite.
Eigen::MatrixXd cholesky_append(const Eigen::Ref<const Eigen::MatrixXd>& l11,
                                const Eigen::Ref<const Eigen::MatrixXd>& a21,
                                const Eigen::Ref<const Eigen::MatrixXd>& a22);

/// Factorization of a symmetric system matrix, either Cholesky or LU.
class SystemFactor {
 public:
  enum class Kind { kCholesky, kLu };

  static SystemFactor compute(const Eigen::Ref<const Eigen::MatrixXd>& a, SolverPolicy policy);
  static SystemFactor from_cholesky(Eigen::MatrixXd lower);

  Kind kind() const noexcept { return kind_; }
  Eigen::Index size() const noexcept { return size_; }

  /// Solves A X = B.
  Eigen::MatrixXd solve(const Eigen::Ref<const Eigen::MatrixXd>& b) const;

  /// The Cholesky factor; throws NumericError for an LU-backed factor.
  const Eigen::MatrixXd& lower() const;

 private:
  SystemFactor() = default;

  Kind kind_ = Kind::kCholesky;
  Eigen::Index size_ = 0;
  Eigen::MatrixXd lower_;
  std::optional<Eigen::PartialPivLU<Eigen::MatrixXd>> lu_;
};

}  // namespace kflow
