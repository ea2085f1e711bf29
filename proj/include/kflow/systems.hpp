#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "kflow/embedding.hpp"

namespace kflow {

enum class SystemKind { kHenon, kVanDerPol, kLorenz };

std::string_view to_string(SystemKind k);
SystemKind parse_system(std::string_view name);

struct SystemSpec {
  SystemKind kind = SystemKind::kHenon;

  double henon_a = 1.4;
  double henon_b = 0.3;
  double vdp_epsilon = 0.01;
  double lorenz_sigma = 10.0;
  double lorenz_rho = 28.0;
  double lorenz_beta = 8.0 / 3.0;

  Eigen::VectorXd initial_state;
  double base_step = 1.0;  // recording interval; unused for the map
  int micro_substeps = 1;  // RK4 steps per recording interval

  bool is_continuous() const noexcept { return kind != SystemKind::kHenon; }
  Eigen::Index dim() const noexcept { return kind == SystemKind::kLorenz ? 3 : 2; }

  void validate() const;

  static SystemSpec henon();
  static SystemSpec van_der_pol();
  static SystemSpec lorenz();
};

using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Vector field of a continuous system (throws for the map).
VectorField vector_field(const SystemSpec& spec);

/// n iterates of x' = 1 - a x^2 + y, y' = b x starting from (and including)
/// x0; times are the indices 0..n-1. Throws DivergenceError once |x| > 1e6.
TimeSeries henon_orbit(double a, double b, const Eigen::Vector2d& x0, Eigen::Index n);

/// Classical RK4 with step dt/substeps, recording n_samples states every dt
/// starting at t = 0 with x0.
TimeSeries integrate_rk4(const VectorField& field, const Eigen::VectorXd& x0, double dt,
                         int substeps, Eigen::Index n_samples);

/// Continuous systems: integrate_rk4 with the spec's field and steps.
TimeSeries integrate(const SystemSpec& spec, Eigen::Index n_samples);

/// Ground-truth trajectory for any system kind: orbit for the map,
/// integration otherwise.
TimeSeries trajectory(const SystemSpec& spec, Eigen::Index n_samples);

struct SamplingScheme {
  int alpha_max = 1;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// `count` i.i.d. multiplicities drawn uniformly from {1, ..., alpha_max}.
std::vector<int> draw_gap_multiplicities(const SamplingScheme& s, std::size_t count);

/// Keeps samples 0, a_1, a_1 + a_2, ... of a regularly spaced series, with
/// the a_k from draw_gap_multiplicities. Returns `count` samples (count = 0:
/// as many as the source allows). Throws InputError if the source runs out.
TimeSeries subsample_irregular(const TimeSeries& ts, const SamplingScheme& s,
                               Eigen::Index count = 0);

/// Source length needed so that subsample_irregular(..., count) succeeds.
Eigen::Index required_source_length(const SamplingScheme& s, Eigen::Index count);

}  // namespace kflow
