#pragma once

#include <filesystem>
#include <string>

#include "gista/metrics.hpp"

namespace gista::app {

/// Persists an experiment: iter_<i>.csv, summary.csv, manifest.json.
void write_run(const std::filesystem::path& out_dir, const ExperimentLog& log,
               const ConvergenceSummary& summary, const std::string& config_path,
               double duration_s);

}  // namespace gista::app
