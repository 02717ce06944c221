#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "gista/sta.hpp"

using namespace gista;

namespace {

std::vector<double> signed_log_grid(int n) {
  std::vector<double> s;
  for (int i = 0; i < n; ++i) {
    const double v = std::pow(10.0, -6.0 + 8.0 * i / (n - 1));
    s.push_back(v);
    s.push_back(-v);
  }
  return s;
}

}  // namespace

TEST(Sgn, Examples) {
  EXPECT_EQ(sgn(3.2), 1.0);
  EXPECT_EQ(sgn(0.0), 0.0);
  EXPECT_EQ(sgn(-0.0), 0.0);
  EXPECT_EQ(sgn(-1e-12), -1.0);
}

TEST(Sgn, RejectsNonFinite) {
  EXPECT_THROW(sgn(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  EXPECT_THROW(sgn(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(0.0, 0.7), 0.0);
  EXPECT_DOUBLE_EQ(phi(1.0, 0.1), 1.1);
  EXPECT_EQ(phi(-0.25, 0.0), -0.5);
}

TEST(Phi, StrictlyIncreasing) {
  double prev = -std::numeric_limits<double>::infinity();
  for (double s = -2.0; s <= 2.0; s += 1e-3) {
    const double p = phi(s, 0.3);
    EXPECT_GT(p, prev);
    prev = p;
  }
}

TEST(Varrho, Examples) {
  EXPECT_NEAR(varrho(1.0, 0.1), 0.66, 1e-15);
  EXPECT_EQ(varrho(0.25, 0.0), 0.5);
  EXPECT_EQ(varrho(0.0, 0.4), 0.0);
}

TEST(Varrho, MatchesFiniteDifferenceChainRule) {
  const double s = 0.5, kc = 0.2, h = 1e-7;
  const double dphi = (phi(s + h, kc) - phi(s - h, kc)) / (2.0 * h);
  EXPECT_NEAR(varrho(s, kc), dphi * phi(s, kc), 1e-8);
}

TEST(DphiDs, Examples) {
  EXPECT_DOUBLE_EQ(dphi_ds(1.0, 0.1), 0.6);
  EXPECT_DOUBLE_EQ(dphi_ds(0.25, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(dphi_ds(1e-4, 0.0), 50.0);
  EXPECT_THROW(dphi_ds(0.0, 0.1), std::domain_error);
}

TEST(StaProperties, ChainRuleIdentityOnLogGrid) {
  for (double kc : {0.0, 0.1, 0.5, 2.0}) {
    for (double s : signed_log_grid(200)) {
      const double r = varrho(s, kc);
      EXPECT_LE(std::fabs(r - dphi_ds(s, kc) * phi(s, kc)), 1e-12 * (1.0 + std::fabs(r)))
          << "s=" << s << " kc=" << kc;
    }
  }
}

TEST(StaProperties, OddnessIsExact) {
  for (double kc : {0.0, 0.1, 0.5, 2.0}) {
    for (double s : signed_log_grid(50)) {
      EXPECT_EQ(phi(-s, kc), -phi(s, kc));
      EXPECT_EQ(varrho(-s, kc), -varrho(s, kc));
    }
  }
}

TEST(StaProperties, ZeroKcIsClassicSuperTwisting) {
  for (double s : signed_log_grid(50)) {
    EXPECT_EQ(phi(s, 0.0), std::sqrt(std::fabs(s)) * sgn(s));
    EXPECT_EQ(varrho(s, 0.0), 0.5 * sgn(s));
  }
}

TEST(StaGains, RejectsOutOfRange) {
  EXPECT_THROW(StaGains(0.0, 0.1, 0.1), std::invalid_argument);
  EXPECT_THROW(StaGains(0.1, -1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(StaGains(0.1, 0.1, -0.1), std::invalid_argument);
  EXPECT_THROW(StaGains(std::nan(""), 0.1, 0.1), std::invalid_argument);
  EXPECT_NO_THROW(StaGains(0.1, 0.1, 0.0));
}

TEST(GstaStep, Examples) {
  const StaGains g0(0.1, 0.1, 0.0);
  auto a = gsta_step(GstaState(g0), 0.0, 1e-3);
  EXPECT_EQ(a.u_st, 0.0);
  EXPECT_EQ(a.next.v, 0.0);

  auto b = gsta_step(GstaState(g0), 1.0, 1e-3);
  EXPECT_DOUBLE_EQ(b.u_st, -0.1);
  EXPECT_DOUBLE_EQ(b.next.v, -5e-4);

  auto c = gsta_step(GstaState(StaGains(0.1, 0.1, 0.1), 0.2), 1.0, 1e-3);
  EXPECT_NEAR(c.u_st, -0.09, 1e-15);
  EXPECT_NEAR(c.next.v, 0.19934, 1e-15);
}

TEST(GstaStep, Errors) {
  const GstaState st(StaGains(0.1, 0.1, 0.1));
  EXPECT_THROW(gsta_step(st, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(gsta_step(st, std::nan(""), 1e-3), std::domain_error);
  EXPECT_THROW(gsta_step(GstaState(StaGains(1e300, 0.1, 1e300)), 1e300, 1e-3),
               std::domain_error);
  EXPECT_THROW(GstaState(StaGains(0.1, 0.1, 0.1), std::numeric_limits<double>::infinity()),
               std::domain_error);
}

TEST(GstaStep, Deterministic) {
  GstaState a(StaGains(0.1, 0.2, 0.3), 0.01), b = a;
  for (int k = 0; k < 1000; ++k) {
    const double s = std::sin(0.01 * k);
    auto ra = gsta_step(a, s, 1e-3);
    auto rb = gsta_step(b, s, 1e-3);
    ASSERT_EQ(ra.u_st, rb.u_st);
    a = ra.next;
    b = rb.next;
  }
  EXPECT_EQ(a.v, b.v);
}

namespace {

// Largest sample-to-sample jump of u_st along s(t) over [0, 1].
double max_u_jump(double dt, double (*s_of_t)(double)) {
  GstaState st(StaGains(0.1, 0.1, 0.1));
  double prev = 0.0, worst = 0.0;
  const int n = static_cast<int>(std::lround(1.0 / dt));
  for (int k = 0; k <= n; ++k) {
    auto r = gsta_step(st, s_of_t(k * dt), dt);
    if (k > 0) worst = std::fmax(worst, std::fabs(r.u_st - prev));
    prev = r.u_st;
    st = r.next;
  }
  return worst;
}

}  // namespace

TEST(GstaStep, ControlContinuityAwayFromZeroIsLinearInDt) {
  auto s_pos = [](double t) { return 0.5 + 0.3 * std::sin(6.0 * t); };
  const double j1 = max_u_jump(1e-3, s_pos);
  const double j2 = max_u_jump(5e-4, s_pos);
  EXPECT_NEAR(j1 / j2, 2.0, 0.05);
}

TEST(GstaStep, ControlContinuityAcrossZeroIsSquareRootInDt) {
  auto s_cross = [](double t) { return t - 0.5; };
  const double j1 = max_u_jump(1e-3, s_cross);
  const double j2 = max_u_jump(2.5e-4, s_cross);
  EXPECT_LT(j2, j1);
  EXPECT_NEAR(j1 / j2, 2.0, 0.25);
}
