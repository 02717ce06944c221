#include "gista/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gista {

double rms(std::span<const double> trace) {
  if (trace.empty()) throw std::invalid_argument("rms of an empty trace");
  double acc = 0.0;
  for (double x : trace) acc += x * x;
  return std::sqrt(acc / static_cast<double>(trace.size()));
}

double max_abs(std::span<const double> trace) {
  if (trace.empty()) throw std::invalid_argument("max_abs of an empty trace");
  double m = 0.0;
  for (double x : trace) m = std::fmax(m, std::fabs(x));
  return m;
}

double trapezoid(std::span<const double> y, double dt) {
  if (y.size() < 2) return 0.0;
  double acc = 0.5 * (y.front() + y.back());
  for (std::size_t k = 1; k + 1 < y.size(); ++k) acc += y[k];
  return acc * dt;
}

double trajectory_error(double x_pos, double y_pos) {
  return std::fabs(x_pos - y_pos) / std::numbers::sqrt2;
}

TrackingErrors tracking_errors(double y1, double y2, double yy, double r) {
  return {(y1 + y2) / 2.0 - r, yy - r};
}

LyapunovTerms lyapunov_diagnostic(const AxisTrace& axis, double dt, double beta, double q,
                                  double kc) {
  if (axis.s.empty() || axis.psi_truth.size() != axis.s.size() ||
      axis.u_ilc.size() != axis.s.size()) {
    throw std::invalid_argument("lyapunov_diagnostic: axis " + axis.name +
                                " lacks s / psi_truth / u_ilc columns");
  }
  const double p = phi(axis.s.back(), kc);
  std::vector<double> sq(axis.s.size());
  for (std::size_t k = 0; k < sq.size(); ++k) {
    const double pt = axis.psi_truth[k] + axis.u_ilc[k];
    sq[k] = pt * pt;
  }
  return {0.5 * beta * p * p, 0.5 / q * trapezoid(sq, dt)};
}

IterationSummary summarize_iteration(const IterationLog& log, const SimConfig& cfg) {
  if (log.axes.size() != cfg.axis_count()) {
    throw std::invalid_argument("summarize_iteration: axis count does not match config");
  }
  IterationSummary out;
  out.iteration = log.iteration;
  const std::size_t n = log.size();

  for (std::size_t a = 0; a < log.axes.size(); ++a) {
    const AxisTrace& tr = log.axes[a];
    const AxisConfig& c = cfg.controllers[a];
    std::vector<double> pt(n);
    for (std::size_t k = 0; k < n; ++k) pt[k] = tr.psi_truth[k] + tr.u_ilc[k];
    const LyapunovTerms v =
        lyapunov_diagnostic(tr, cfg.dt(), c.ilc.beta(), c.ilc.q(), c.gains.kc());
    out.axes.push_back({tr.name, rms(tr.e), max_abs(tr.e), rms(tr.s), max_abs(tr.s), rms(pt),
                        v.v1, v.v2});
  }

  if (cfg.plant == PlantKind::gantry) {
    const AxisTrace& a1 = log.axes[0];
    const AxisTrace& a2 = log.axes[1];
    const AxisTrace& ay = log.axes[2];
    std::vector<double> ex(n), ey(n), ed(n);
    for (std::size_t k = 0; k < n; ++k) {
      const TrackingErrors te = tracking_errors(a1.y[k], a2.y[k], ay.y[k], log.r[k]);
      ex[k] = te.e_x;
      ey[k] = te.e_y;
      ed[k] = trajectory_error((a1.y[k] + a2.y[k]) / 2.0, ay.y[k]);
    }
    out.gantry = GantryIndices{rms(ed), max_abs(ed), rms(ex), rms(ey), max_abs(ex), max_abs(ey)};
  }
  return out;
}

ConvergenceSummary summarize(const ExperimentLog& log) {
  ConvergenceSummary out;
  for (std::size_t i = 0; i < log.completed(); ++i) {
    out.iterations.push_back(summarize_iteration(log.iterations[i], log.config));
  }
  return out;
}

std::vector<std::string> summary_columns(const SimConfig& cfg) {
  std::vector<std::string> cols{"iteration"};
  if (cfg.plant == PlantKind::gantry) {
    for (const char* c : {"rmse", "maxae", "rmse_ex", "rmse_ey", "maxae_ex", "maxae_ey"}) {
      cols.emplace_back(c);
    }
  }
  for (const auto& c : cfg.controllers) {
    for (const char* f : {"rmse_e_", "maxae_e_", "rmssv_", "maxasv_", "rms_psi_tilde_", "v1_",
                          "v2_"}) {
      cols.push_back(f + c.name);
    }
  }
  return cols;
}

std::vector<double> summary_row(const IterationSummary& s) {
  std::vector<double> row{static_cast<double>(s.iteration)};
  if (s.gantry) {
    const GantryIndices& g = *s.gantry;
    row.insert(row.end(), {g.rmse, g.maxae, g.rmse_ex, g.rmse_ey, g.maxae_ex, g.maxae_ey});
  }
  for (const auto& a : s.axes) {
    row.insert(row.end(),
               {a.rmse_e, a.maxae_e, a.rmssv, a.maxasv, a.rms_psi_tilde, a.v1, a.v2});
  }
  return row;
}

}  // namespace gista
