#include "gista/controller.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace gista {

SlidingConfig::SlidingConfig(double lambda) : lambda_(lambda) {
  if (!(std::isfinite(lambda) && lambda > 0.0)) {
    throw std::invalid_argument("sliding surface slope lambda must be finite and positive");
  }
}

double sliding_variable(double e, double e_dot, double lambda) {
  if (!std::isfinite(e) || !std::isfinite(e_dot) || !std::isfinite(lambda)) {
    throw std::domain_error("sliding_variable: non-finite input");
  }
  return lambda * e + e_dot;
}

AxisState operator+(const AxisState& a, const AxisState& b) {
  return {a.x1 + b.x1, a.x2 + b.x2};
}

AxisState operator*(double h, const AxisState& a) { return {h * a.x1, h * a.x2}; }

bool all_finite(const AxisState& a) { return std::isfinite(a.x1) && std::isfinite(a.x2); }

AxisController::AxisController(AxisConfig cfg, std::size_t n_samples)
    : AxisController(std::move(cfg), ilc_init(n_samples)) {}

AxisController::AxisController(AxisConfig cfg, IlcMemory prev)
    : cfg_(std::move(cfg)),
      gsta_(cfg_.gains),
      prev_(std::move(prev)),
      next_(prev_.size(), 0.0) {}

ControlOutput AxisController::step(double e, double e_dot, std::size_t k, double dt) {
  if (k >= horizon()) {
    throw std::out_of_range("axis " + cfg_.name + ": sample " + std::to_string(k) +
                            " overruns horizon of " + std::to_string(horizon()));
  }
  if (k != cursor_) {
    throw std::logic_error("axis " + cfg_.name + ": expected sample " +
                           std::to_string(cursor_) + ", got " + std::to_string(k));
  }
  const double s = sliding_variable(e, e_dot, cfg_.sliding.lambda());
  GstaStep st = gsta_step(gsta_, s, dt);
  const double held = k == 0 ? 0.0 : next_[k - 1];
  const double u_ilc = ilc_sample_update(prev_[k], s, cfg_.ilc, cfg_.gains.kc(), held);
  const double u = st.u_st + u_ilc;
  if (!std::isfinite(u)) {
    throw std::domain_error("axis " + cfg_.name + ": control input u is not finite");
  }
  next_[k] = u_ilc;
  gsta_ = st.next;
  ++cursor_;
  return {s, u, st.u_st, u_ilc};
}

void AxisController::end_iteration() {
  if (cursor_ != horizon()) {
    throw std::logic_error("axis " + cfg_.name + ": iteration rollover at sample " +
                           std::to_string(cursor_) + " of " + std::to_string(horizon()));
  }
  prev_ = IlcMemory(std::exchange(next_, std::vector<double>(horizon(), 0.0)),
                    prev_.iteration() + 1);
  if (!cfg_.carry_v) {
    gsta_ = GstaState(cfg_.gains);
  }
  cursor_ = 0;
}

AxisBank::AxisBank(std::vector<AxisController> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) {
    throw std::invalid_argument("axis bank needs at least one axis");
  }
}

std::vector<ControlOutput> AxisBank::step(std::span<const double> e,
                                          std::span<const double> e_dot, std::size_t k,
                                          double dt) {
  if (e.size() != axes_.size() || e_dot.size() != axes_.size()) {
    throw std::invalid_argument("axis bank: error vector size does not match axis count");
  }
  std::vector<ControlOutput> out;
  out.reserve(axes_.size());
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    out.push_back(axes_[i].step(e[i], e_dot[i], k, dt));
  }
  return out;
}

void AxisBank::end_iteration() {
  for (auto& a : axes_) a.end_iteration();
}

AxisBank make_axis_bank(std::size_t n_axes, std::span<const AxisConfig> configs,
                        std::size_t n_samples) {
  if (n_axes == 0) {
    throw std::invalid_argument("make_axis_bank: at least one axis required");
  }
  if (configs.size() != n_axes) {
    throw std::invalid_argument("make_axis_bank: " + std::to_string(configs.size()) +
                                " configs for " + std::to_string(n_axes) + " axes");
  }
  std::vector<AxisController> axes;
  axes.reserve(n_axes);
  for (const auto& c : configs) axes.emplace_back(c, n_samples);
  return AxisBank(std::move(axes));
}

}  // namespace gista
