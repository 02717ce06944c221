#include "gista/sim.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace gista {

namespace {

constexpr double kDivergenceBox = 1e3;

struct Snapshot {
  std::vector<double> pos, vel;
};

Snapshot snapshot(const GantryState& s) {
  return {{s.y1, s.y2, s.yy}, {s.y1_dot, s.y2_dot, s.yy_dot}};
}

Snapshot snapshot(const AxisState& s) { return {{s.x1}, {s.x2}}; }

bool out_of_box(const Snapshot& s) {
  for (double y : s.pos) {
    if (!(std::fabs(y) <= kDivergenceBox)) return true;
  }
  return false;
}

AxisTrace reserve_trace(std::string name, std::size_t n) {
  AxisTrace a;
  a.name = std::move(name);
  for (auto* v : {&a.y, &a.ydot, &a.e, &a.edot, &a.s, &a.u, &a.u_st, &a.u_ilc, &a.psi_truth,
                  &a.d}) {
    v->reserve(n);
  }
  return a;
}

template <class State, class Step, class Dist>
IterationResult iterate(const SimConfig& cfg, AxisBank& bank, std::size_t iteration,
                        const State& initial, Step&& advance, Dist&& dist) {
  const std::size_t n = cfg.samples();
  const std::size_t na = cfg.axis_count();
  const double dt = cfg.dt();
  const auto ref = scurve_sample(cfg.reference);

  IterationResult res;
  IterationLog& log = res.log;
  log.iteration = iteration;
  log.t.reserve(n);
  log.r.reserve(n);
  log.rdot.reserve(n);
  for (std::size_t a = 0; a < na; ++a) {
    log.axes.push_back(reserve_trace(bank[a].config().name, n));
  }

  State x = initial;
  std::vector<double> prev_pos = snapshot(x).pos;
  std::vector<double> e(na), edot(na), u(na), d(na), s_true(na);

  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * dt;
    const RefSample& rk = ref[k];
    const Snapshot now = snapshot(x);
    for (std::size_t a = 0; a < na; ++a) {
      const double lambda = bank[a].config().sliding.lambda();
      e[a] = now.pos[a] - rk.r;
      const double v_true = now.vel[a];
      s_true[a] = sliding_variable(e[a], v_true - rk.r_dot, lambda);
      double v_ctl = v_true;
      if (cfg.measured_output && k > 0) v_ctl = (now.pos[a] - prev_pos[a]) / dt;
      edot[a] = v_ctl - rk.r_dot;
      d[a] = dist(a, now.vel[a], t);
    }

    std::vector<ControlOutput> co;
    State next;
    try {
      co = bank.step(e, edot, k, dt);
      for (std::size_t a = 0; a < na; ++a) u[a] = co[a].u;
      next = advance(x, u, t, dt, StepContext{iteration, k});
    } catch (const DivergenceError& ex) {
      res.divergence = DivergenceRecord{iteration, k, ex.what()};
      return res;
    } catch (const SingularityError& ex) {
      res.divergence = DivergenceRecord{iteration, k, ex.what()};
      return res;
    } catch (const std::domain_error& ex) {
      res.divergence = DivergenceRecord{iteration, k, ex.what()};
      return res;
    }

    const Snapshot after = snapshot(next);
    const RefSample r_next = scurve_eval(cfg.reference, static_cast<double>(k + 1) * dt);

    log.t.push_back(t);
    log.r.push_back(rk.r);
    log.rdot.push_back(rk.r_dot);
    for (std::size_t a = 0; a < na; ++a) {
      const double lambda = bank[a].config().sliding.lambda();
      const double s_next =
          sliding_variable(after.pos[a] - r_next.r, after.vel[a] - r_next.r_dot, lambda);
      AxisTrace& tr = log.axes[a];
      tr.y.push_back(now.pos[a]);
      tr.ydot.push_back(now.vel[a]);
      tr.e.push_back(e[a]);
      tr.edot.push_back(edot[a]);
      tr.s.push_back(co[a].s);
      tr.u.push_back(co[a].u);
      tr.u_st.push_back(co[a].u_st);
      tr.u_ilc.push_back(co[a].u_ilc);
      tr.psi_truth.push_back((s_next - s_true[a]) / dt - co[a].u);
      tr.d.push_back(d[a]);
    }

    if (out_of_box(after)) {
      res.divergence =
          DivergenceRecord{iteration, k, "carriage position left the +/-1e3 m divergence box"};
      return res;
    }
    prev_pos = now.pos;
    x = next;
  }
  return res;
}

}  // namespace

std::vector<std::string> axis_names(PlantKind kind) {
  if (kind == PlantKind::gantry) return {"x1", "x2", "y"};
  return {"x"};
}

std::vector<AxisConfig> default_controllers(PlantKind kind) {
  std::vector<AxisConfig> out;
  for (auto& name : axis_names(kind)) {
    AxisConfig c;
    c.name = name;
    out.push_back(c);
  }
  return out;
}

void SimConfig::validate() const {
  if (n_iterations < 1) throw ConfigError("at least one iteration is required");
  if (controllers.size() != axis_count()) {
    throw ConfigError("expected " + std::to_string(axis_count()) + " axis controllers, got " +
                      std::to_string(controllers.size()));
  }
  if (!(std::isfinite(phase_jitter) && phase_jitter >= 0.0)) {
    throw ConfigError("phase_jitter must be finite and non-negative");
  }
  if (plant == PlantKind::gantry) {
    gantry.validate();
    gantry_disturbance.d1.validate();
    gantry_disturbance.d2.validate();
    gantry_disturbance.dy.validate();
    if (!all_finite(gantry_initial)) throw ConfigError("initial gantry state must be finite");
    if (!gantry.theta_frozen_zero &&
        std::cos(theta(gantry_initial.y1, gantry_initial.y2, gantry.L_arm)) < gantry.cos_min) {
      throw ConfigError("initial carriage offset violates the cross-arm rotation guard");
    }
  } else {
    axis.validate();
    if (!all_finite(axis_initial)) throw ConfigError("initial axis state must be finite");
  }
}

IterationResult run_iteration(const SimConfig& cfg, AxisBank& bank, std::size_t iteration,
                              const GantryDisturbance& gantry_dist,
                              const DisturbanceSpec& axis_dist) {
  if (bank.size() != cfg.axis_count()) {
    throw std::invalid_argument("run_iteration: bank size does not match the plant");
  }
  for (std::size_t a = 0; a < bank.size(); ++a) {
    if (bank[a].cursor() != 0) throw std::logic_error("run_iteration: bank not at cursor 0");
    if (bank[a].horizon() != cfg.samples()) {
      throw std::invalid_argument("run_iteration: controller horizon does not match config");
    }
  }

  if (cfg.plant == PlantKind::gantry) {
    const std::array<const DisturbanceSpec*, 3> specs{&gantry_dist.d1, &gantry_dist.d2,
                                                      &gantry_dist.dy};
    auto advance = [&](const GantryState& x, const std::vector<double>& u, double t, double dt,
                       StepContext ctx) {
      auto f = [&](const GantryState& s, double tt) {
        return gantry_derivatives(s, u[0], u[1], u[2], cfg.gantry, gantry_dist, tt);
      };
      return rk4_step(f, x, t, dt, ctx);
    };
    auto dist = [&](std::size_t a, double v, double t) { return disturbance(*specs[a], v, t); };
    return iterate(cfg, bank, iteration, cfg.gantry_initial, advance, dist);
  }

  AxisPlantParams plant = cfg.axis;
  plant.extra = axis_dist;
  auto advance = [&](const AxisState& x, const std::vector<double>& u, double t, double dt,
                     StepContext ctx) {
    auto f = [&](const AxisState& s, double tt) { return axis_derivatives(s, u[0], plant, tt); };
    return rk4_step(f, x, t, dt, ctx);
  };
  auto dist = [&](std::size_t, double v, double t) {
    return axis_w(plant, t) + disturbance(plant.extra, v, t);
  };
  return iterate(cfg, bank, iteration, cfg.axis_initial, advance, dist);
}

ExperimentLog run_experiment(const SimConfig& cfg) {
  cfg.validate();
  ExperimentLog out;
  out.config = cfg;
  AxisBank bank = make_axis_bank(cfg.axis_count(), cfg.controllers, cfg.samples());

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> jitter(-cfg.phase_jitter, cfg.phase_jitter);
  auto jittered = [&](DisturbanceSpec d) {
    if (cfg.phase_jitter > 0.0) d.sin_phase += jitter(rng);
    return d;
  };

  for (std::size_t i = 1; i <= cfg.n_iterations; ++i) {
    GantryDisturbance gd{jittered(cfg.gantry_disturbance.d1), jittered(cfg.gantry_disturbance.d2),
                         jittered(cfg.gantry_disturbance.dy)};
    DisturbanceSpec ad = jittered(cfg.axis.extra);
    IterationResult r = run_iteration(cfg, bank, i, gd, ad);
    out.iterations.push_back(std::move(r.log));
    if (r.divergence) {
      out.divergence = std::move(r.divergence);
      break;
    }
    bank.end_iteration();
  }
  return out;
}

}  // namespace gista
