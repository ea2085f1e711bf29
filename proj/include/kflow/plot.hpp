#pragma once

#include <filesystem>
#include <string>

#include "kflow/experiment.hpp"

namespace kflow {

/// Phase-space scatter of true vs predicted states. Uses (x1, x2), or
/// (x1, x3) for three-dimensional systems.
std::string phase_plot_svg(const ForecastResult& f, const std::string& title);

/// One panel per coordinate: truth and prediction against time, with
/// dashed lines at chunk starts.
std::string time_series_svg(const ForecastResult& f, const TimeSeries& test,
                            const std::string& title);

/// Writes phase and time-series plots for the first repetition of every
/// successful approach under <output_dir>/plots.
void emit_plots(const ExperimentReport& report);

}  // namespace kflow
