#pragma once

#include <boost/property_tree/ptree.hpp>
#include <optional>
#include <string>

#include "gista/sim.hpp"

namespace gista::app {

using boost::property_tree::ptree;

/// Reads an INI file. Throws ConfigError if it is missing or malformed.
ptree read_ini(const std::string& path);

/// Builds a validated config from INI sections. Unknown sections or keys,
/// unparsable values and out-of-contract parameters all raise ConfigError.
/// A [sweep] section is ignored here.
SimConfig parse_config(const ptree& tree);
SimConfig load_config(const std::string& path);

/// Resolved config as INI; parse_config(to_ini(c)) == c.
std::string to_ini(const SimConfig& cfg);

struct Overrides {
  std::optional<std::size_t> iterations;
  std::optional<double> dt;
};

SimConfig apply_overrides(SimConfig cfg, const Overrides& o);

}  // namespace gista::app
