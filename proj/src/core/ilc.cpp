#include "gista/ilc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "gista/sta.hpp"

namespace gista {

IlcParams::IlcParams(double q, double beta, double epsilon)
    : q_(q), beta_(beta), epsilon_(epsilon) {
  if (!(std::isfinite(q) && q > 0.0)) {
    throw std::invalid_argument("ILC gain q must be finite and positive");
  }
  if (!(std::isfinite(beta) && beta > 0.0)) {
    throw std::invalid_argument("ILC gain beta must be finite and positive");
  }
  if (std::isnan(epsilon) || epsilon < 0.0) {
    throw std::invalid_argument("ILC deadband epsilon must be non-negative");
  }
}

IlcMemory::IlcMemory(std::vector<double> samples, std::size_t iteration)
    : samples_(std::move(samples)), iteration_(iteration) {
  if (samples_.empty()) {
    throw std::invalid_argument("ILC memory must hold at least one sample");
  }
  for (double x : samples_) {
    if (!std::isfinite(x)) {
      throw std::domain_error("ILC memory entries must be finite");
    }
  }
}

void IlcMemory::set(std::size_t k, double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("ILC memory sample " + std::to_string(k) + " is not finite");
  }
  samples_.at(k) = value;
}

IlcMemory ilc_init(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("ilc_init: horizon must contain at least one sample");
  }
  return IlcMemory(std::vector<double>(n, 0.0), 0);
}

double ilc_sample_update(double prev_at_k, double s, const IlcParams& params, double kc,
                         double held_value) {
  if (!std::isfinite(prev_at_k) || !std::isfinite(held_value)) {
    throw std::domain_error("ilc_sample_update: non-finite memory input");
  }
  double out;
  if (std::fabs(s) > params.epsilon()) {
    out = prev_at_k - 2.0 * params.q() * params.beta() * varrho(s, kc);
  } else {
    sgn(s);  // rejects non-finite s on the hold branch too
    out = held_value;
  }
  if (!std::isfinite(out)) {
    throw std::domain_error("ilc_sample_update: learning input u_ilc is not finite");
  }
  return out;
}

IlcMemory ilc_run_iteration_update(const IlcMemory& mem, std::span<const double> s_trace,
                                   const IlcParams& params, double kc) {
  if (s_trace.size() != mem.size()) {
    throw std::invalid_argument("ilc_run_iteration_update: s trace has " +
                                std::to_string(s_trace.size()) + " samples, memory has " +
                                std::to_string(mem.size()));
  }
  std::vector<double> next(mem.size());
  double held = 0.0;
  for (std::size_t k = 0; k < mem.size(); ++k) {
    next[k] = ilc_sample_update(mem[k], s_trace[k], params, kc, held);
    held = next[k];
  }
  return IlcMemory(std::move(next), mem.iteration() + 1);
}

std::vector<double> psi_estimate(const IlcMemory& mem) {
  std::vector<double> out;
  out.reserve(mem.size());
  for (double u : mem.samples()) {
    out.push_back(-u);
  }
  return out;
}

}  // namespace gista
