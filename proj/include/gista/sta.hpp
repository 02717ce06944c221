#pragma once

// Generalized super-twisting algorithm (GSTA).
//
//   u_st  = -k1 * phi(s) + k2 * v
//   v_dot = -varrho(s)
//   phi(s)    = |s|^(1/2) sgn(s) + kc s
//   varrho(s) = 1/2 sgn(s) + 3/2 kc |s|^(1/2) sgn(s) + kc^2 s  = phi'(s) phi(s)
//
// kc = 0 recovers the classic super-twisting controller.

namespace gista {

/// Sign with sgn(0) = 0. Throws std::domain_error on NaN/Inf.
double sgn(double x);

double phi(double s, double kc);
double varrho(double s, double kc);

/// d(phi)/ds = 1/2 |s|^(-1/2) + kc. Singular at s = 0 (throws std::domain_error).
/// Only used to check the closed-form varrho; the control path never calls it.
double dphi_ds(double s, double kc);

class StaGains {
 public:
  /// Throws std::invalid_argument unless k1 > 0, k2 > 0, kc >= 0 (all finite).
  StaGains(double k1, double k2, double kc);

  double k1() const noexcept { return k1_; }
  double k2() const noexcept { return k2_; }
  double kc() const noexcept { return kc_; }

  bool operator==(const StaGains&) const = default;

 private:
  double k1_;
  double k2_;
  double kc_;
};

struct GstaState {
  double v = 0.0;  ///< integrator state, control-input units
  StaGains gains;

  explicit GstaState(StaGains g, double v0 = 0.0);
};

struct GstaStep {
  double u_st;
  GstaState next;
};

/// One sample of the GSTA with sample-and-hold semantics: u_st uses the
/// current v, then v is advanced by explicit Euler, v' = v - dt * varrho(s).
GstaStep gsta_step(const GstaState& state, double s, double dt);

}  // namespace gista
