#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gista/ilc.hpp"
#include "gista/sta.hpp"

namespace gista {

class SlidingConfig {
 public:
  explicit SlidingConfig(double lambda);
  double lambda() const noexcept { return lambda_; }
  bool operator==(const SlidingConfig&) const = default;

 private:
  double lambda_;
};

/// s = lambda * e + e_dot
double sliding_variable(double e, double e_dot, double lambda);

/// Position/velocity of one mechanical axis.
struct AxisState {
  double x1 = 0.0;
  double x2 = 0.0;

  bool operator==(const AxisState&) const = default;
};

AxisState operator+(const AxisState& a, const AxisState& b);
AxisState operator*(double h, const AxisState& a);
bool all_finite(const AxisState& a);

struct AxisConfig {
  std::string name;
  SlidingConfig sliding{5.0};
  StaGains gains{0.1, 0.1, 0.1};
  IlcParams ilc{1.5, 0.1, 1e-6};
  bool carry_v = false;  ///< keep the GSTA integrator across iterations

  bool operator==(const AxisConfig&) const = default;
};

struct ControlOutput {
  double s;
  double u;
  double u_st;
  double u_ilc;
};

/// One axis of the 2-DOF controller u = u_st + u_ilc.
///
/// Within an iteration the learning memory is read from the previous
/// iteration and written for the next one, one sample per step.
class AxisController {
 public:
  AxisController(AxisConfig cfg, std::size_t n_samples);
  AxisController(AxisConfig cfg, IlcMemory prev);

  /// k must equal the sample cursor. Throws std::out_of_range when k >= N and
  /// std::logic_error when k skips or repeats a sample.
  ControlOutput step(double e, double e_dot, std::size_t k, double dt);

  /// Rolls the written memory over. Throws std::logic_error unless the
  /// cursor has reached N.
  void end_iteration();

  const AxisConfig& config() const noexcept { return cfg_; }
  const GstaState& gsta() const noexcept { return gsta_; }
  const IlcMemory& ilc_prev() const noexcept { return prev_; }
  std::span<const double> ilc_next() const noexcept { return next_; }
  std::size_t cursor() const noexcept { return cursor_; }
  std::size_t horizon() const noexcept { return prev_.size(); }
  std::size_t iteration() const noexcept { return prev_.iteration(); }

 private:
  AxisConfig cfg_;
  GstaState gsta_;
  IlcMemory prev_;
  std::vector<double> next_;
  std::size_t cursor_ = 0;
};

/// Independent controllers, one per axis; no state is shared between them.
class AxisBank {
 public:
  explicit AxisBank(std::vector<AxisController> axes);

  std::size_t size() const noexcept { return axes_.size(); }
  AxisController& operator[](std::size_t i) { return axes_.at(i); }
  const AxisController& operator[](std::size_t i) const { return axes_.at(i); }

  /// Steps every axis with its own error pair. Sizes must match the bank.
  std::vector<ControlOutput> step(std::span<const double> e, std::span<const double> e_dot,
                                  std::size_t k, double dt);
  void end_iteration();

 private:
  std::vector<AxisController> axes_;
};

/// Throws std::invalid_argument if n_axes == 0 or configs.size() != n_axes.
AxisBank make_axis_bank(std::size_t n_axes, std::span<const AxisConfig> configs,
                        std::size_t n_samples);

}  // namespace gista
