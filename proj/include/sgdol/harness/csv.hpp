#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sgdol/harness/experiment.hpp"

namespace sgdol {

// Shortest decimal that parses back to the same double.
std::string format_number(double value);
double parse_number(std::string_view text);

// Header: t,grad_sq_norm,f_value,stepsize_mean[,stepsize_1..d][,opt_gap]
std::string csv_header(const OptimizerSeries& series);
void write_csv(const OptimizerSeries& series, const std::filesystem::path& path);
// One <name>.csv per optimizer in `directory` (created if missing).
void write_csv(const ResultTable& table, const std::filesystem::path& directory);

// Inverse of write_csv for a single file; name and kind are not stored.
OptimizerSeries read_csv(const std::filesystem::path& path);

}  // namespace sgdol
