#pragma once

#include <string>
#include <vector>

#include "wigner/io/config.hpp"
#include "wigner/io/csv.hpp"

namespace wigner::io {

// First table is the primary output; further tables are written next to it as
// <stem>.<name>.csv.
std::vector<CsvTable> run(const RunConfig& config);

// Column-to-axis metadata for the primary table.
std::string plot_script(const RunConfig& config, const std::string& csv_path);

enum ExitCode : int { kSuccess = 0, kNumericFailure = 1, kConfigFailure = 2 };

}  // namespace wigner::io
