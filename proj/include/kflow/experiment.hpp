#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kflow/forecaster.hpp"
#include "kflow/io.hpp"
#include "kflow/kernel_flows.hpp"
#include "kflow/metrics.hpp"
#include "kflow/systems.hpp"

namespace kflow {

/// The five compared pipelines.
///   A: time-aware (irregular) embedding, learned kernel
///   B: regular delay embedding, learned kernel
///   C: Euler embedding, learned kernel
///   D: time-aware embedding, random kernel
///   E: regular delay embedding, random kernel
enum class Approach { kA, kB, kC, kD, kE };

char to_char(Approach a);
Approach parse_approach(char c);
EmbeddingVariant variant_of(Approach a);
bool is_trained(Approach a);

/// Which Kernel Flows parameters the final regressor uses.
enum class ParamSelection { kBest, kFinal };

struct ExperimentConfig {
  SystemSpec system = SystemSpec::henon();
  SamplingScheme sampling{3, 17};
  Eigen::Index burn_in = 1000;
  Eigen::Index n_train = 600;
  Eigen::Index n_test = 400;
  KFConfig kf;
  int delay = 1;
  int horizon = 5;
  std::vector<Approach> approaches{Approach::kA, Approach::kB, Approach::kD, Approach::kE};
  int repetitions = 5;
  std::uint64_t seed = 2024;
  bool standardize = false;
  ParamSelection selection = ParamSelection::kBest;
  std::filesystem::path output_dir = "out";

  /// Throws ConfigError (e.g. the Euler approach on the Henon map).
  void validate() const;

  static ExperimentConfig from_key_values(const io::KeyValues& kv);
  io::KeyValues to_key_values() const;

  /// Seed of the U(0,1) kernel draw for repetition r; SGD uses seed + 1.
  std::uint64_t repetition_seed(int r) const;

  ForecastConfig forecast_config(Approach a) const;
};

/// Subsampled series split into training and test parts.
struct ExperimentData {
  TimeSeries train;
  TimeSeries test;
};

/// Trajectory, burn-in removal, irregular subsampling and the train/test split.
ExperimentData generate_data(const ExperimentConfig& cfg);

struct RunRecord {
  Approach approach = Approach::kA;
  int repetition = 0;
  std::uint64_t init_seed = 0;
  std::uint64_t sgd_seed = 0;
  std::string error;  // empty on success
  ScoreReport score;
  KernelParams initial_params;
  KernelParams used_params;
  int kf_iterations = 0;
  int kf_skipped = 0;
  int kf_best_iteration = -1;
  double kf_best_rho = 0.0;
  std::optional<ForecastResult> forecast;
  std::vector<TraceRow> trace;

  bool ok() const noexcept { return error.empty(); }
  /// MSE / R^2 with failed runs counted as +inf / -inf.
  double effective_mse() const;
  double effective_r2() const;
};

struct ApproachSummary {
  Approach approach = Approach::kA;
  int runs = 0;
  int failures = 0;
  double mse_mean = 0.0;
  double mse_std = 0.0;
  double r2_mean = 0.0;
  double r2_std = 0.0;
  double mse_median = 0.0;
  double r2_median = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  ExperimentData data;
  std::vector<RunRecord> runs;

  std::vector<ApproachSummary> summarize() const;
  std::optional<ApproachSummary> summary(Approach a) const;
};

/// Runs every (repetition, approach) pair. Module errors are recorded on the
/// run and do not stop the others. Deterministic in the config.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Single (approach, repetition) run on prepared data.
RunRecord run_single(const ExperimentConfig& cfg, const ExperimentData& data, Approach a, int r);

/// Sample mean and (n-1) standard deviation; std is 0 for a single value.
struct MeanStd {
  double mean;
  double std;
};
MeanStd mean_std(const std::vector<double>& v);
double median(std::vector<double> v);

/// Aligned text table of mean +/- std per approach. Means with MSE > 1 print
/// as ">>1" and R^2 < 0 as "<<0".
std::string emit_table(const ExperimentReport& report);
std::string summary_csv(const ExperimentReport& report);
/// One row per (approach, repetition).
std::string runs_csv(const ExperimentReport& report);
std::string predictions_csv(const ForecastResult& f, const TimeSeries& test);
std::string trace_csv(const std::vector<TraceRow>& rows);
/// Inverse of predictions_csv.
ForecastResult predictions_from_csv(std::string_view text);

/// Writes config, datasets, runs/summary CSVs, the text table, predictions
/// and traces under cfg.output_dir.
void write_report(const ExperimentReport& report);

}  // namespace kflow
