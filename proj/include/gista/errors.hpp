#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gista {

/// Malformed or out-of-contract experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cross-arm rotation left the region where the gantry model is valid.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double theta)
      : std::runtime_error(what), theta_(theta) {}
  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

/// A simulated quantity became non-finite or left the divergence box.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::size_t iteration, std::size_t sample)
      : std::runtime_error(what), iteration_(iteration), sample_(sample) {}
  std::size_t iteration() const noexcept { return iteration_; }
  std::size_t sample() const noexcept { return sample_; }

 private:
  std::size_t iteration_;
  std::size_t sample_;
};

}  // namespace gista
