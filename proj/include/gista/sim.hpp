#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gista/controller.hpp"
#include "gista/errors.hpp"
#include "gista/plant.hpp"
#include "gista/reference.hpp"

namespace gista {

inline bool all_finite(double x) { return std::isfinite(x); }

struct StepContext {
  std::size_t iteration = 0;
  std::size_t sample = 0;
};

/// Classical RK4 over [t, t + dt] with the control held by the caller inside
/// f(state, t). Throws DivergenceError if the new state is not finite.
template <class State, class F>
State rk4_step(F&& f, const State& x, double t, double dt, StepContext ctx = {}) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");
  const double h2 = 0.5 * dt;
  const State k1 = f(x, t);
  const State k2 = f(x + h2 * k1, t + h2);
  const State k3 = f(x + h2 * k2, t + h2);
  const State k4 = f(x + dt * k3, t + dt);
  State out = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!all_finite(out)) {
    throw DivergenceError("plant state became non-finite at iteration " +
                              std::to_string(ctx.iteration) + ", sample " +
                              std::to_string(ctx.sample),
                          ctx.iteration, ctx.sample);
  }
  return out;
}

enum class PlantKind { gantry, axis };

/// Default controller configs for a plant kind.
std::vector<AxisConfig> default_controllers(PlantKind kind);
std::vector<std::string> axis_names(PlantKind kind);

struct SimConfig {
  PlantKind plant = PlantKind::gantry;
  std::size_t n_iterations = 6;
  SCurveProfile reference{0.1, 0.2, 1.2, 2.0, 1e-3};

  GantryParams gantry;
  GantryDisturbance gantry_disturbance;
  GantryState gantry_initial;

  AxisPlantParams axis;
  AxisState axis_initial;

  /// One entry per controlled axis: x1, x2, y for the gantry, x for the axis plant.
  std::vector<AxisConfig> controllers = default_controllers(PlantKind::gantry);

  bool measured_output = false;  ///< e_dot from a backward difference of y
  double phase_jitter = 0.0;     ///< per-iteration uniform jitter of disturbance phases, rad
  std::uint64_t seed = 0;

  double dt() const noexcept { return reference.dt(); }
  std::size_t samples() const noexcept { return reference.samples(); }
  std::size_t axis_count() const noexcept { return plant == PlantKind::gantry ? 3 : 1; }

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
  bool operator==(const SimConfig&) const = default;
};

struct AxisTrace {
  std::string name;
  std::vector<double> y, ydot, e, edot, s, u, u_st, u_ilc, psi_truth, d;
};

struct IterationLog {
  std::size_t iteration = 0;  ///< 1-based
  std::vector<double> t, r, rdot;
  std::vector<AxisTrace> axes;

  std::size_t size() const noexcept { return t.size(); }
};

struct DivergenceRecord {
  std::size_t iteration;
  std::size_t sample;
  std::string message;
};

struct IterationResult {
  IterationLog log;
  std::optional<DivergenceRecord> divergence;  ///< set when the log is partial
};

/// Runs one iteration from the configured initial state. The bank must be
/// at cursor 0; it is left at cursor N on success.
IterationResult run_iteration(const SimConfig& cfg, AxisBank& bank, std::size_t iteration,
                              const GantryDisturbance& gantry_dist,
                              const DisturbanceSpec& axis_dist);

struct ExperimentLog {
  SimConfig config;
  std::vector<IterationLog> iterations;         ///< includes a trailing partial log on abort
  std::optional<DivergenceRecord> divergence;

  std::size_t completed() const noexcept {
    return divergence ? iterations.size() - 1 : iterations.size();
  }
};

/// Throws ConfigError for an invalid config; divergence is reported in the log.
ExperimentLog run_experiment(const SimConfig& cfg);

}  // namespace gista
