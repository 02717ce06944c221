#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gista/app/config.hpp"
#include "gista/metrics.hpp"

namespace gista::app {

inline constexpr const char* kVersion = "0.3.1";

enum ExitCode : int { kOk = 0, kConfigError = 1, kDiverged = 2, kSweepFailure = 3 };

struct RunOptions {
  std::string config_path;
  std::string out_dir;
  Overrides overrides;
};

/// Writes iter_<i>.csv, summary.csv and manifest.json into out_dir.
int cmd_run(const RunOptions& opt, std::ostream& err);

struct SweepOptions {
  std::string config_path;
  std::string out_dir;
  Overrides overrides;
  int jobs = 0;  ///< 0 picks the OpenMP default
};

int cmd_sweep(const SweepOptions& opt, std::ostream& err);

int cmd_plotdata(const std::string& out_dir, std::ostream& err);

/// One grid axis: a section/key pair and its candidate values.
struct SweepAxis {
  std::string section;
  std::string key;
  std::vector<std::string> values;
};

struct SweepGrid {
  ptree base;
  std::vector<SweepAxis> axes;

  std::size_t size() const;
  /// Coordinates of point i, first axis slowest.
  std::vector<std::string> coordinates(std::size_t i) const;
  ptree point(std::size_t i) const;
};

/// Splits "[sweep] section.key = a, b, c" entries at the last dot.
SweepGrid parse_sweep(const ptree& tree);

struct PointOutcome {
  enum class Status { ok, diverged, error } status = Status::error;
  std::optional<IterationSummary> final;
  std::string message;
};

using PointFn = std::function<PointOutcome(std::size_t)>;

/// Serial reference and OpenMP-parallel evaluation of independent sweep
/// points. Exceptions thrown by fn become Status::error outcomes.
std::vector<PointOutcome> sweep_serial(std::size_t n, const PointFn& fn);
std::vector<PointOutcome> sweep_parallel(std::size_t n, int jobs, const PointFn& fn);

/// In-memory run of one config: no files touched.
PointOutcome evaluate_point(const SimConfig& cfg);

}  // namespace gista::app
