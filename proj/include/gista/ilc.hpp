#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gista {

/// Gains of the signum-type learning law and the deadband threshold on |s|.
class IlcParams {
 public:
  /// Throws std::invalid_argument unless q > 0, beta > 0, epsilon >= 0.
  /// epsilon may be +infinity (learning permanently held).
  IlcParams(double q, double beta, double epsilon);

  double q() const noexcept { return q_; }
  double beta() const noexcept { return beta_; }
  double epsilon() const noexcept { return epsilon_; }

  bool operator==(const IlcParams&) const = default;

 private:
  double q_;
  double beta_;
  double epsilon_;
};

/// Stored learning input u_ilc over one iteration, one value per sample.
/// The lumped-uncertainty estimate is its negation (psi_hat = -u_ilc).
class IlcMemory {
 public:
  IlcMemory(std::vector<double> samples, std::size_t iteration);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::size_t iteration() const noexcept { return iteration_; }

  double operator[](std::size_t k) const { return samples_[k]; }
  /// Throws std::domain_error on a non-finite value.
  void set(std::size_t k, double value);

 private:
  std::vector<double> samples_;
  std::size_t iteration_;
};

/// Zero memory of length n at iteration 0. Throws std::invalid_argument if n == 0.
IlcMemory ilc_init(std::size_t n);

/// One sample of the deadband-modified learning law:
///   |s| >  eps : u_next(k) = u_prev(k) - 2 q beta varrho(s, kc)
///   |s| <= eps : u_next(k) = u_next(k-1)      (held_value; 0 for k = 0)
double ilc_sample_update(double prev_at_k, double s, const IlcParams& params, double kc,
                         double held_value);

/// Applies ilc_sample_update over a whole trace in sample order.
IlcMemory ilc_run_iteration_update(const IlcMemory& mem, std::span<const double> s_trace,
                                   const IlcParams& params, double kc);

std::vector<double> psi_estimate(const IlcMemory& mem);

}  // namespace gista
