#include <gtest/gtest.h>

#include <stdexcept>

#include "gista/app/commands.hpp"

using namespace gista;
using namespace gista::app;

namespace {

std::vector<SimConfig> grid_configs() {
  std::vector<SimConfig> out;
  for (double q : {1.0, 1.5}) {
    for (double beta : {0.05, 0.1}) {
      SimConfig c;
      c.n_iterations = 2;
      for (auto& a : c.controllers) a.ilc = IlcParams(q, beta, 1e-6);
      out.push_back(c);
    }
  }
  SimConfig bad;
  bad.gantry.coupling = CouplingSign::literal;
  out.push_back(bad);
  return out;
}

}  // namespace

TEST(Sweep, ParallelMatchesSerialReference) {
  const auto cfgs = grid_configs();
  const PointFn fn = [&](std::size_t i) { return evaluate_point(cfgs[i]); };
  const auto serial = sweep_serial(cfgs.size(), fn);
  const auto parallel = sweep_parallel(cfgs.size(), 4, fn);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].status, parallel[i].status);
    ASSERT_EQ(serial[i].final.has_value(), parallel[i].final.has_value());
    if (serial[i].final) {
      EXPECT_EQ(summary_row(*serial[i].final), summary_row(*parallel[i].final));
    }
  }
  EXPECT_EQ(serial.back().status, PointOutcome::Status::diverged);
  EXPECT_EQ(serial.front().status, PointOutcome::Status::ok);
}

TEST(Sweep, ExceptionsBecomeErrorOutcomes) {
  const PointFn fn = [](std::size_t i) -> PointOutcome {
    if (i == 1) throw std::runtime_error("boom");
    PointOutcome o;
    o.status = PointOutcome::Status::ok;
    return o;
  };
  for (const auto& r : {sweep_serial(3, fn), sweep_parallel(3, 2, fn)}) {
    EXPECT_EQ(r[0].status, PointOutcome::Status::ok);
    EXPECT_EQ(r[1].status, PointOutcome::Status::error);
    EXPECT_EQ(r[1].message, "boom");
  }
}
