#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gista/sim.hpp"

namespace gista {

/// Both throw std::invalid_argument on an empty trace.
double rms(std::span<const double> trace);
double max_abs(std::span<const double> trace);

/// Trapezoidal integral of uniformly spaced samples.
double trapezoid(std::span<const double> y, double dt);

/// |x - y| / sqrt(2): distance from the commanded y = x path.
double trajectory_error(double x_pos, double y_pos);

struct TrackingErrors {
  double e_x;
  double e_y;
};

/// e_x = (y1 + y2) / 2 - r, e_y = yy - r
TrackingErrors tracking_errors(double y1, double y2, double yy, double r);

struct LyapunovTerms {
  double v1;
  double v2;
  double total() const noexcept { return v1 + v2; }
};

/// V1 = beta/2 phi(s_last)^2, V2 = 1/(2q) int psi_tilde^2 with
/// psi_tilde = psi_truth + u_ilc. Throws std::invalid_argument if the axis
/// traces are missing or empty.
LyapunovTerms lyapunov_diagnostic(const AxisTrace& axis, double dt, double beta, double q,
                                  double kc);

struct AxisIndices {
  std::string name;
  double rmse_e, maxae_e;
  double rmssv, maxasv;
  double rms_psi_tilde;
  double v1, v2;
};

struct GantryIndices {
  double rmse, maxae;  ///< trajectory error e_d
  double rmse_ex, rmse_ey, maxae_ex, maxae_ey;
};

struct IterationSummary {
  std::size_t iteration;
  std::optional<GantryIndices> gantry;
  std::vector<AxisIndices> axes;
};

struct ConvergenceSummary {
  std::vector<IterationSummary> iterations;
};

/// Works only from logged columns, so a log read back from CSV gives the same result.
IterationSummary summarize_iteration(const IterationLog& log, const SimConfig& cfg);
/// Summarizes completed iterations only.
ConvergenceSummary summarize(const ExperimentLog& log);

/// Column order shared by summary.csv and sweep.csv.
std::vector<std::string> summary_columns(const SimConfig& cfg);
std::vector<double> summary_row(const IterationSummary& s);

}  // namespace gista
