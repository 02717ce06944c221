#pragma once

#include "gista/controller.hpp"

namespace gista {

enum class CouplingSign {
  restoring,  ///< X1 feels -v, X2 feels +v (spring pulls carriages together)
  literal,    ///< X1 feels +v, X2 feels -v
};

struct GantryParams {
  double m_e = 11.512;
  double m_c = 4.371;
  double m_1 = 1.728;
  double m_2 = 1.586;
  double K_v = 8693.7;
  double Gamma_1 = 172.7;
  double Gamma_2 = 172.7;
  double Gamma_e = 172.7;
  double K_f = 100.0;
  double L_arm = 0.5;
  double cos_min = 0.5;
  CouplingSign coupling = CouplingSign::restoring;
  bool theta_frozen_zero = false;

  double M1() const noexcept { return (m_e + m_c) / 2.0 + m_1; }
  double M2() const noexcept { return (m_e + m_c) / 2.0 + m_2; }

  /// Throws ConfigError on non-physical values.
  void validate() const;
  bool operator==(const GantryParams&) const = default;
};

struct GantryState {
  double y1 = 0.0, y2 = 0.0, yy = 0.0;
  double y1_dot = 0.0, y2_dot = 0.0, yy_dot = 0.0;

  bool operator==(const GantryState&) const = default;
};

GantryState operator+(const GantryState& a, const GantryState& b);
GantryState operator*(double h, const GantryState& a);
bool all_finite(const GantryState& s);

/// d = constant + coulomb_amp sgn(v) + viscous_extra v + sin_amp sin(2 pi f t + phase)
struct DisturbanceSpec {
  double constant = 0.0;
  double coulomb_amp = 0.0;
  double viscous_extra = 0.0;
  double sin_amp = 0.0;
  double sin_freq = 0.0;
  double sin_phase = 0.0;

  void validate() const;
  bool operator==(const DisturbanceSpec&) const = default;
};

/// 2 sgn(v) + 0.5 sin(2 pi 5 t) N
inline constexpr DisturbanceSpec kDefaultCarriageDisturbance{0.0, 2.0, 0.0, 0.5, 5.0, 0.0};

struct GantryDisturbance {
  DisturbanceSpec d1 = kDefaultCarriageDisturbance;
  DisturbanceSpec d2 = kDefaultCarriageDisturbance;
  DisturbanceSpec dy = kDefaultCarriageDisturbance;
  bool operator==(const GantryDisturbance&) const = default;
};

double coupling_force(double y1, double y2, double K_v);
double theta(double y1, double y2, double L_arm);
double disturbance(const DisturbanceSpec& spec, double velocity, double t);

/// Throws SingularityError if cos(theta) < cos_min.
GantryState gantry_derivatives(const GantryState& st, double u1, double u2, double uy,
                               const GantryParams& p, const GantryDisturbance& d, double t);
GantryState gantry_derivatives(const GantryState& st, double u1, double u2, double uy,
                               const GantryParams& p, double t);

/// Single-axis plant M x'' = K_f u - Gamma x' + w(t) + d(x', t) with a known
/// smooth w(t) = w_amp sin(2 pi w_freq t + w_phase). With d = 0 it is the
/// oracle plant whose lumped uncertainty is available in closed form.
struct AxisPlantParams {
  double M = 1.0;
  double K_f = 10.0;
  double Gamma = 0.0;
  double w_amp = 50.0;
  double w_freq = 0.1;
  double w_phase = 0.0;
  DisturbanceSpec extra;

  void validate() const;
  bool operator==(const AxisPlantParams&) const = default;
};

double axis_w(const AxisPlantParams& p, double t);

/// Throws ConfigError if the plant carries a non-zero extra disturbance.
AxisState oracle_axis_derivatives(const AxisState& x, double u, const AxisPlantParams& p,
                                  double t);
AxisState axis_derivatives(const AxisState& x, double u, const AxisPlantParams& p, double t);

/// Closed-form psi = s_dot - u for s = lambda (x - r) + (x' - r').
double oracle_psi(const AxisState& x, double u, double r_dot, double r_ddot, double lambda,
                  const AxisPlantParams& p, double t);

}  // namespace gista
