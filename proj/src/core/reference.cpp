#include "gista/reference.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gista/errors.hpp"

namespace gista {

SCurveProfile::SCurveProfile(double amplitude, double t_start, double t_end, double horizon,
                             double dt)
    : amplitude_(amplitude), t_start_(t_start), t_end_(t_end), horizon_(horizon), dt_(dt) {
  if (!std::isfinite(amplitude)) throw ConfigError("reference amplitude must be finite");
  if (!(std::isfinite(t_start) && std::isfinite(t_end) && std::isfinite(horizon))) {
    throw ConfigError("reference timing must be finite");
  }
  if (!(0.0 <= t_start && t_start < t_end && t_end <= horizon)) {
    throw ConfigError("reference timing needs 0 <= t_start < t_end <= horizon");
  }
  if (!(std::isfinite(dt) && dt > 0.0)) throw ConfigError("dt must be finite and positive");
  const double ratio = horizon / dt;
  const double n = std::round(ratio);
  if (std::fabs(ratio - n) > 1e-9 || n < 1.0) {
    throw ConfigError("horizon / dt = " + std::to_string(ratio) + " is not an integer");
  }
  n_ = static_cast<std::size_t>(n);
}

RefSample scurve_eval(const SCurveProfile& p, double t) {
  const double slack = 1e-12 * p.horizon();
  if (!(t >= -slack && t <= p.horizon() + slack)) {
    throw std::out_of_range("scurve_eval: t = " + std::to_string(t) + " outside [0, horizon]");
  }
  const double T = p.t_end() - p.t_start();
  const double A = p.amplitude();
  if (t <= p.t_start()) return {0.0, 0.0, 0.0};
  if (t >= p.t_end()) return {A, 0.0, 0.0};
  const double tau = (t - p.t_start()) / T;
  const double t2 = tau * tau;
  const double t3 = t2 * tau;
  return {A * t3 * (10.0 + tau * (-15.0 + 6.0 * tau)),
          A * t2 * (30.0 + tau * (-60.0 + 30.0 * tau)) / T,
          A * tau * (60.0 + tau * (-180.0 + 120.0 * tau)) / (T * T)};
}

std::vector<RefSample> scurve_sample(const SCurveProfile& p) {
  std::vector<RefSample> out;
  out.reserve(p.samples());
  for (std::size_t k = 0; k < p.samples(); ++k) {
    out.push_back(scurve_eval(p, static_cast<double>(k) * p.dt()));
  }
  return out;
}

}  // namespace gista
