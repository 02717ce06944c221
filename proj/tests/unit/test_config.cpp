#include <gtest/gtest.h>

#include <boost/property_tree/ini_parser.hpp>
#include <sstream>

#include "gista/app/commands.hpp"
#include "gista/app/config.hpp"
#include "gista/errors.hpp"

using namespace gista;
using namespace gista::app;

namespace {

ptree ini(const std::string& text) {
  std::istringstream is(text);
  ptree t;
  boost::property_tree::ini_parser::read_ini(is, t);
  return t;
}

std::string cfg_path(const char* name) {
  return std::string(GISTA_SOURCE_DIR) + "/configs/" + name;
}

}  // namespace

TEST(Config, BundledGantryMatchesDefaults) {
  const SimConfig c = load_config(cfg_path("gantry_paper.cfg"));
  EXPECT_EQ(c, SimConfig{});
  EXPECT_EQ(c.n_iterations, 6u);
  EXPECT_EQ(c.controllers.size(), 3u);
  EXPECT_EQ(c.controllers[2].name, "y");
  EXPECT_EQ(c.controllers[0].ilc.q(), 1.5);
  EXPECT_EQ(c.gantry_disturbance.dy.coulomb_amp, 2.0);
}

TEST(Config, BundledOracle) {
  const SimConfig c = load_config(cfg_path("oracle_axis.cfg"));
  EXPECT_EQ(c.plant, PlantKind::axis);
  EXPECT_EQ(c.n_iterations, 10u);
  EXPECT_EQ(c.axis.K_f, 10.0);
  EXPECT_EQ(c.axis.extra, DisturbanceSpec{});
}

TEST(Config, EmptyFileGivesGantryDefaults) { EXPECT_EQ(parse_config(ptree{}), SimConfig{}); }

TEST(Config, PerAxisOverrides) {
  const SimConfig c = parse_config(ini(
      "[controller]\nq = 2\n[controller.y]\nq = 0.5\nlambda = 3\n"
      "[disturbance.x2]\nsin_amp = 0\n[initial]\ny1 = 1e-4\n"));
  EXPECT_EQ(c.controllers[0].ilc.q(), 2.0);
  EXPECT_EQ(c.controllers[2].ilc.q(), 0.5);
  EXPECT_EQ(c.controllers[2].sliding.lambda(), 3.0);
  EXPECT_EQ(c.gantry_disturbance.d1.sin_amp, 0.5);
  EXPECT_EQ(c.gantry_disturbance.d2.sin_amp, 0.0);
  EXPECT_EQ(c.gantry_initial.y1, 1e-4);
}

TEST(Config, StrictValidation) {
  EXPECT_THROW(parse_config(ini("[bogus]\na = 1\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[controller]\nk3 = 1\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[controller]\nk1 = abc\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[controller]\nk1 = 0\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[sim]\nplant = boat\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[sim]\niterations = -2\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[sim]\ndt = 0.0007\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[gantry]\ncoupling = sideways\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[sim]\nplant = axis\n[gantry]\nK_f = 1\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[controller.x]\nq = 1\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[disturbance]\ncoulomb = -1\n")), ConfigError);
  EXPECT_THROW(parse_config(ini("[sim]\nmeasured_output = maybe\n")), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/gista.cfg"), ConfigError);
}

TEST(Config, EchoRoundTrips) {
  SimConfig c = parse_config(ini(
      "[sim]\nseed = 12\nphase_jitter = 0.125\n[controller.x2]\nkc = 0.3\ncarry_v = true\n"
      "[gantry]\ncoupling = literal\ntheta_frozen_zero = true\nm_2 = 1.7\n"
      "[disturbance.y]\nconstant = -0.4\n[initial]\nyy_dot = 0.01\n"));
  EXPECT_EQ(parse_config(ini(to_ini(c))), c);
  const SimConfig o = load_config(cfg_path("oracle_axis.cfg"));
  EXPECT_EQ(parse_config(ini(to_ini(o))), o);
}

TEST(Config, Overrides) {
  const SimConfig c = apply_overrides(SimConfig{}, Overrides{4, 5e-4});
  EXPECT_EQ(c.n_iterations, 4u);
  EXPECT_EQ(c.samples(), 4000u);
  EXPECT_THROW(apply_overrides(SimConfig{}, Overrides{0, std::nullopt}), ConfigError);
  EXPECT_THROW(apply_overrides(SimConfig{}, Overrides{std::nullopt, 3e-3}), ConfigError);
}

TEST(SweepGrid, ParsesAndEnumeratesRowMajor) {
  const SweepGrid g = parse_sweep(ini(
      "[sim]\niterations = 2\n[sweep]\ncontroller.q = 1.0, 1.5\ncontroller.x1.beta = 0.05,0.1,0.2\n"));
  ASSERT_EQ(g.axes.size(), 2u);
  EXPECT_EQ(g.axes[1].section, "controller.x1");
  EXPECT_EQ(g.axes[1].key, "beta");
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.coordinates(0), (std::vector<std::string>{"1.0", "0.05"}));
  EXPECT_EQ(g.coordinates(4), (std::vector<std::string>{"1.5", "0.1"}));
  const SimConfig c = parse_config(g.point(5));
  EXPECT_EQ(c.controllers[0].ilc.q(), 1.5);
  EXPECT_EQ(c.controllers[0].ilc.beta(), 0.2);
  EXPECT_EQ(c.controllers[1].ilc.beta(), 0.1);
  EXPECT_EQ(c.n_iterations, 2u);
}

TEST(SweepGrid, Rejections) {
  EXPECT_THROW(parse_sweep(ini("[sweep]\nq = 1, 2\n")), ConfigError);
  EXPECT_THROW(parse_sweep(ini("[sweep]\nsim.plant = gantry, axis\n")), ConfigError);
  EXPECT_THROW(parse_sweep(ini("[sweep]\ncontroller.q = 1,,2\n")), ConfigError);
  std::string big = "[sweep]\n";
  for (const char* k : {"controller.q", "controller.beta", "controller.k1", "controller.k2",
                        "controller.kc"}) {
    big += std::string(k) + " = 1,2,3,4,5,6,7\n";
  }
  EXPECT_THROW(parse_sweep(ini(big)), ConfigError);
  EXPECT_EQ(parse_sweep(ini("[sim]\niterations = 1\n")).size(), 1u);
}
