#include "gista/plant.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gista/errors.hpp"

namespace gista {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }
bool non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void GantryParams::validate() const {
  require(positive(m_e) && positive(m_c) && positive(m_1) && positive(m_2),
          "gantry masses must be positive");
  require(positive(K_v), "flexure stiffness K_v must be positive");
  require(positive(K_f), "force constant K_f must be positive");
  require(positive(L_arm), "cross-arm length L_arm must be positive");
  require(non_negative(Gamma_1) && non_negative(Gamma_2) && non_negative(Gamma_e),
          "gantry dampings must be non-negative");
  require(std::isfinite(cos_min) && cos_min > 0.0 && cos_min <= 1.0,
          "cos_min must lie in (0, 1]");
}

GantryState operator+(const GantryState& a, const GantryState& b) {
  return {a.y1 + b.y1,         a.y2 + b.y2,         a.yy + b.yy,
          a.y1_dot + b.y1_dot, a.y2_dot + b.y2_dot, a.yy_dot + b.yy_dot};
}

GantryState operator*(double h, const GantryState& a) {
  return {h * a.y1, h * a.y2, h * a.yy, h * a.y1_dot, h * a.y2_dot, h * a.yy_dot};
}

bool all_finite(const GantryState& s) {
  return std::isfinite(s.y1) && std::isfinite(s.y2) && std::isfinite(s.yy) &&
         std::isfinite(s.y1_dot) && std::isfinite(s.y2_dot) && std::isfinite(s.yy_dot);
}

void DisturbanceSpec::validate() const {
  require(std::isfinite(constant), "disturbance constant must be finite");
  require(non_negative(coulomb_amp) && non_negative(viscous_extra) && non_negative(sin_amp) &&
              non_negative(sin_freq),
          "disturbance amplitudes and frequency must be non-negative");
  require(std::isfinite(sin_phase), "disturbance phase must be finite");
}

double coupling_force(double y1, double y2, double K_v) { return K_v * (y1 - y2); }

double theta(double y1, double y2, double L_arm) { return std::atan((y1 - y2) / L_arm); }

double disturbance(const DisturbanceSpec& spec, double velocity, double t) {
  double d = spec.constant + spec.coulomb_amp * sgn(velocity) + spec.viscous_extra * velocity;
  if (spec.sin_amp != 0.0) {
    d += spec.sin_amp * std::sin(2.0 * std::numbers::pi * spec.sin_freq * t + spec.sin_phase);
  }
  return d;
}

GantryState gantry_derivatives(const GantryState& st, double u1, double u2, double uy,
                               const GantryParams& p, const GantryDisturbance& d, double t) {
  const double th = p.theta_frozen_zero ? 0.0 : theta(st.y1, st.y2, p.L_arm);
  const double c = std::cos(th);
  if (!(c >= p.cos_min)) {
    throw SingularityError("cross-arm rotation " + std::to_string(th) +
                               " rad exceeds the cos_min guard",
                           th);
  }
  const double v = coupling_force(st.y1, st.y2, p.K_v);
  const double fv = p.coupling == CouplingSign::restoring ? -v : v;
  const double M_e = p.m_e / c;

  GantryState out;
  out.y1 = st.y1_dot;
  out.y2 = st.y2_dot;
  out.yy = st.yy_dot;
  out.y1_dot =
      (p.K_f * u1 - p.Gamma_1 * st.y1_dot + fv + disturbance(d.d1, st.y1_dot, t)) / p.M1();
  out.y2_dot =
      (p.K_f * u2 - p.Gamma_2 * st.y2_dot - fv + disturbance(d.d2, st.y2_dot, t)) / p.M2();
  out.yy_dot =
      (p.K_f * uy - (p.Gamma_e / c) * st.yy_dot + disturbance(d.dy, st.yy_dot, t)) / M_e;
  return out;
}

GantryState gantry_derivatives(const GantryState& st, double u1, double u2, double uy,
                               const GantryParams& p, double t) {
  const GantryDisturbance none{DisturbanceSpec{}, DisturbanceSpec{}, DisturbanceSpec{}};
  return gantry_derivatives(st, u1, u2, uy, p, none, t);
}

void AxisPlantParams::validate() const {
  require(positive(M), "axis mass M must be positive");
  require(positive(K_f), "axis force constant K_f must be positive");
  require(non_negative(Gamma), "axis damping Gamma must be non-negative");
  require(std::isfinite(w_amp) && non_negative(w_freq) && std::isfinite(w_phase),
          "axis w(t) parameters must be finite");
  extra.validate();
}

double axis_w(const AxisPlantParams& p, double t) {
  return p.w_amp * std::sin(2.0 * std::numbers::pi * p.w_freq * t + p.w_phase);
}

AxisState axis_derivatives(const AxisState& x, double u, const AxisPlantParams& p, double t) {
  const double f = p.K_f * u - p.Gamma * x.x2 + axis_w(p, t) + disturbance(p.extra, x.x2, t);
  return {x.x2, f / p.M};
}

AxisState oracle_axis_derivatives(const AxisState& x, double u, const AxisPlantParams& p,
                                  double t) {
  if (!(p.extra == DisturbanceSpec{})) {
    throw ConfigError("oracle plant must not carry an extra disturbance");
  }
  return axis_derivatives(x, u, p, t);
}

double oracle_psi(const AxisState& x, double u, double r_dot, double r_ddot, double lambda,
                  const AxisPlantParams& p, double t) {
  const double x_ddot = oracle_axis_derivatives(x, u, p, t).x2;
  return lambda * (x.x2 - r_dot) + (x_ddot - r_ddot) - u;
}

}  // namespace gista
