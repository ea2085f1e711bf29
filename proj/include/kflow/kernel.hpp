#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace kflow {

/// Number of learnable kernel scalars: five amplitudes then six scales.
inline constexpr std::size_t kNumKernelParams = 11;

using Theta = Eigen::Matrix<double, kNumKernelParams, 1>;

/// Lower bound applied to |sigma_i| for the scales that appear squared in a
/// denominator (sigma_0, sigma_1, sigma_2, sigma_5). Stored values are never
/// modified.
inline constexpr double kScaleFloor = 1e-8;

/// Parameters of the composite kernel
///
///   k(x,y) = g0^2 max(0, 1 - r^2/s0^2)            triangular
///          + g1^2 exp(-r^2/s1^2)                  Gaussian
///          + g2^2 exp(-r/s2^2)                    Laplace
///          + g3^2 exp(-s3 sin^2(s4 pi r^2)) exp(-r^2/s5^2)   locally periodic
///          + g4^2 r^2                             quadratic
///
/// with r = ||x - y||_2. Flattened order is (g0..g4, s0..s5).
struct KernelParams {
  std::array<double, 5> gamma{};
  std::array<double, 6> sigma{};

  Theta to_theta() const;
  static KernelParams from_theta(const Theta& theta);

  /// All eleven values equal to `value`.
  static KernelParams uniform(double value);

  bool all_finite() const;

  friend bool operator==(const KernelParams&, const KernelParams&) = default;
};

/// Kernel value as a function of the squared distance r^2 = ||x-y||^2.
double eval_kernel_sq_dist(const KernelParams& p, double sq_dist);

/// Throws InputError on dimension mismatch and NumericError (naming the term)
/// on a non-finite result.
double eval_kernel(const KernelParams& p, const Eigen::Ref<const Eigen::VectorXd>& x,
                   const Eigen::Ref<const Eigen::VectorXd>& y);

/// Partial derivatives of k with respect to (g0..g4, s0..s5) at squared
/// distance `sq_dist`.
Theta kernel_param_gradient_sq_dist(const KernelParams& p, double sq_dist);

/// Gram matrix K(X,X); rows of X are points. The upper triangle is computed
/// and mirrored, so the result is exactly symmetric.
Eigen::MatrixXd gram(const KernelParams& p, const Eigen::Ref<const Eigen::MatrixXd>& X);

/// Cross-kernel matrix K(A,B) with entries k(A_i, B_j).
Eigen::MatrixXd cross_gram(const KernelParams& p, const Eigen::Ref<const Eigen::MatrixXd>& A,
                           const Eigen::Ref<const Eigen::MatrixXd>& B);

/// Row vector K(x, X).
Eigen::RowVectorXd kernel_row(const KernelParams& p, const Eigen::Ref<const Eigen::VectorXd>& x,
                              const Eigen::Ref<const Eigen::MatrixXd>& X);

/// dK(X,X)/dtheta_k for k = 0..10, in flattened parameter order.
std::vector<Eigen::MatrixXd> gram_param_gradient(const KernelParams& p,
                                                 const Eigen::Ref<const Eigen::MatrixXd>& X);

/// Pairwise squared Euclidean distances between the rows of X (exactly
/// symmetric, zero diagonal).
Eigen::MatrixXd pairwise_sq_dist(const Eigen::Ref<const Eigen::MatrixXd>& X);

}  // namespace kflow
