#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "kflow/embedding.hpp"
#include "kflow/kernel.hpp"

namespace kflow::io {

/// Shortest-round-trip is not required; 17 significant digits always
/// reproduces the double exactly.
std::string format_double(double v);
double parse_double(std::string_view text);

/// Writes `content` to a temporary sibling then renames it over `path`.
/// Creates parent directories. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

/// Dataset CSV: header `t,x1,...,xd`, one observation per row.
std::string dataset_to_csv(const TimeSeries& ts);
TimeSeries dataset_from_csv(std::string_view text);
void write_dataset(const std::filesystem::path& path, const TimeSeries& ts);
TimeSeries read_dataset(const std::filesystem::path& path);

/// Flat `key=value` text; `#` starts a comment, blank lines are ignored.
using KeyValues = std::map<std::string, std::string, std::less<>>;
KeyValues parse_key_values(std::string_view text);
std::string format_key_values(const KeyValues& kv);

/// Kernel parameter files use keys gamma0..gamma4, sigma0..sigma5.
std::string params_to_text(const KernelParams& p);
KernelParams params_from_text(std::string_view text);

/// Minimal numeric CSV: header names plus rows of doubles.
struct NumericTable {
  std::vector<std::string> header;
  Eigen::MatrixXd values;

  Eigen::Index column(std::string_view name) const;
};
NumericTable parse_numeric_csv(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

}  // namespace kflow::io
