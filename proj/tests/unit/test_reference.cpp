#include <gtest/gtest.h>

#include <cmath>

#include "gista/errors.hpp"
#include "gista/reference.hpp"

using namespace gista;

namespace {
const SCurveProfile kDefault(0.1, 0.2, 1.2, 2.0, 1e-3);
}

TEST(SCurve, Validation) {
  EXPECT_THROW(SCurveProfile(0.1, 1.2, 0.2, 2.0, 1e-3), ConfigError);
  EXPECT_THROW(SCurveProfile(0.1, -0.1, 1.2, 2.0, 1e-3), ConfigError);
  EXPECT_THROW(SCurveProfile(0.1, 0.2, 2.5, 2.0, 1e-3), ConfigError);
  EXPECT_THROW(SCurveProfile(0.1, 0.2, 1.2, 2.0, 0.0), ConfigError);
  EXPECT_THROW(SCurveProfile(0.1, 0.2, 1.2, 2.0, 3e-3), ConfigError);
  EXPECT_THROW(SCurveProfile(std::nan(""), 0.2, 1.2, 2.0, 1e-3), ConfigError);
  EXPECT_EQ(kDefault.samples(), 2000u);
}

TEST(SCurve, BoundaryConditions) {
  for (double t : {0.0, 0.1, 0.2}) {
    const RefSample r = scurve_eval(kDefault, t);
    EXPECT_EQ(r.r, 0.0);
    EXPECT_EQ(r.r_dot, 0.0);
    EXPECT_EQ(r.r_ddot, 0.0);
  }
  for (double t : {1.2, 1.5, 2.0}) {
    const RefSample r = scurve_eval(kDefault, t);
    EXPECT_EQ(r.r, 0.1);
    EXPECT_EQ(r.r_dot, 0.0);
    EXPECT_EQ(r.r_ddot, 0.0);
  }
}

TEST(SCurve, MidpointSymmetry) {
  const RefSample r = scurve_eval(kDefault, 0.7);
  EXPECT_NEAR(r.r, 0.05, 1e-16);
  EXPECT_NEAR(r.r_ddot, 0.0, 1e-14);
}

TEST(SCurve, OutsideHorizonRejected) {
  EXPECT_THROW(scurve_eval(kDefault, -1e-6), std::out_of_range);
  EXPECT_THROW(scurve_eval(kDefault, 2.001), std::out_of_range);
}

TEST(SCurve, SampleGrid) {
  const auto tr = scurve_sample(kDefault);
  ASSERT_EQ(tr.size(), 2000u);
  const auto again = scurve_sample(kDefault);
  for (std::size_t k = 0; k < tr.size(); ++k) {
    ASSERT_EQ(tr[k].r, again[k].r);
    ASSERT_EQ(tr[k].r_dot, again[k].r_dot);
  }
  const auto z = scurve_sample(SCurveProfile(0.0, 0.2, 1.2, 2.0, 1e-3));
  for (const auto& s : z) {
    ASSERT_EQ(s.r, 0.0);
    ASSERT_EQ(s.r_dot, 0.0);
    ASSERT_EQ(s.r_ddot, 0.0);
  }
}

TEST(SCurve, VelocityIntegratesToPosition) {
  const auto tr = scurve_sample(kDefault);
  const double T = kDefault.t_end() - kDefault.t_start();
  const double dt = kDefault.dt();
  // trapezoid error inside the move is bounded by T dt^2 max|r'''| / 12, max|r'''| = 60 A / T^3
  const double inner_tol = T * dt * dt * (60.0 * kDefault.amplitude() / (T * T * T)) / 12.0;
  double integral = 0.0;
  double worst = 0.0;
  for (std::size_t k = 1; k < tr.size(); ++k) {
    integral += 0.5 * (tr[k - 1].r_dot + tr[k].r_dot) * dt;
    worst = std::fmax(worst, std::fabs(integral - tr[k].r));
  }
  EXPECT_LE(worst, inner_tol);
  // with r'' = 0 at both ends the end-to-end error terms cancel
  EXPECT_LE(std::fabs(integral - tr.back().r), 1e-9 * kDefault.amplitude());
}

TEST(SCurve, DerivativesMatchCentralDifferences) {
  const double h = 1e-6;
  const double tol = 1e-6 * kDefault.amplitude() / (kDefault.t_end() - kDefault.t_start());
  double worst_v = 0.0, worst_a = 0.0;
  for (std::size_t k = 1; k + 1 < kDefault.samples(); ++k) {
    const double t = static_cast<double>(k) * kDefault.dt();
    // jerk jumps at the two knots, so r'' has a kink there and the stencil error is ~h*jump/4
    if (std::fabs(t - kDefault.t_start()) < 2 * h || std::fabs(t - kDefault.t_end()) < 2 * h) {
      continue;
    }
    const RefSample lo = scurve_eval(kDefault, t - h), hi = scurve_eval(kDefault, t + h);
    const RefSample mid = scurve_eval(kDefault, t);
    worst_v = std::fmax(worst_v, std::fabs((hi.r - lo.r) / (2 * h) - mid.r_dot));
    worst_a = std::fmax(worst_a, std::fabs((hi.r_dot - lo.r_dot) / (2 * h) - mid.r_ddot));
  }
  EXPECT_LE(worst_v, tol);
  EXPECT_LE(worst_a, tol);
}

TEST(SCurve, MonotoneForPositiveAmplitude) {
  const auto tr = scurve_sample(kDefault);
  for (std::size_t k = 1; k < tr.size(); ++k) ASSERT_GE(tr[k].r, tr[k - 1].r);
}
