#pragma once

#include <cstddef>
#include <vector>

namespace gista {

/// Quintic smoothstep point-to-point move: r = A (10 tau^3 - 15 tau^4 + 6 tau^5),
/// tau = (t - t_start) / (t_end - t_start) clamped to [0, 1].
class SCurveProfile {
 public:
  /// Throws ConfigError unless 0 <= t_start < t_end <= horizon, dt > 0 and
  /// horizon / dt is within 1e-9 of an integer.
  SCurveProfile(double amplitude, double t_start, double t_end, double horizon, double dt);

  double amplitude() const noexcept { return amplitude_; }
  double t_start() const noexcept { return t_start_; }
  double t_end() const noexcept { return t_end_; }
  double horizon() const noexcept { return horizon_; }
  double dt() const noexcept { return dt_; }
  std::size_t samples() const noexcept { return n_; }

  bool operator==(const SCurveProfile&) const = default;

 private:
  double amplitude_, t_start_, t_end_, horizon_, dt_;
  std::size_t n_;
};

struct RefSample {
  double r;
  double r_dot;
  double r_ddot;
};

/// Throws std::out_of_range for t outside [0, horizon].
RefSample scurve_eval(const SCurveProfile& p, double t);

/// Samples at t = k dt, k = 0 .. N-1.
std::vector<RefSample> scurve_sample(const SCurveProfile& p);

}  // namespace gista
