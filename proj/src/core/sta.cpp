#include "gista/sta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gista {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + " is not finite");
  }
}

}  // namespace

double sgn(double x) {
  require_finite(x, "sgn argument");
  return static_cast<double>((x > 0.0) - (x < 0.0));
}

double phi(double s, double kc) {
  const double sign = sgn(s);
  return std::sqrt(std::fabs(s)) * sign + kc * s;
}

double varrho(double s, double kc) {
  const double sign = sgn(s);
  return 0.5 * sign + 1.5 * kc * std::sqrt(std::fabs(s)) * sign + kc * kc * s;
}

double dphi_ds(double s, double kc) {
  require_finite(s, "s");
  if (s == 0.0) {
    throw std::domain_error("dphi_ds is singular at s = 0");
  }
  return 0.5 / std::sqrt(std::fabs(s)) + kc;
}

StaGains::StaGains(double k1, double k2, double kc) : k1_(k1), k2_(k2), kc_(kc) {
  if (!(std::isfinite(k1) && k1 > 0.0)) {
    throw std::invalid_argument("k1 must be a finite positive gain");
  }
  if (!(std::isfinite(k2) && k2 > 0.0)) {
    throw std::invalid_argument("k2 must be a finite positive gain");
  }
  if (!(std::isfinite(kc) && kc >= 0.0)) {
    throw std::invalid_argument("kc must be a finite non-negative gain");
  }
}

GstaState::GstaState(StaGains g, double v0) : v(v0), gains(g) {
  require_finite(v0, "GSTA integrator state v");
}

GstaStep gsta_step(const GstaState& state, double s, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("gsta_step: dt must be finite and positive");
  }
  require_finite(s, "sliding variable s");
  const StaGains& g = state.gains;
  const double u_st = -g.k1() * phi(s, g.kc()) + g.k2() * state.v;
  const double v_next = state.v - dt * varrho(s, g.kc());
  require_finite(u_st, "super-twisting output u_st");
  require_finite(v_next, "GSTA integrator state v");
  return {u_st, GstaState(g, v_next)};
}

}  // namespace gista
