#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gista/sim.hpp"

namespace gista::app {

std::string sha256_file(const std::filesystem::path& p);

struct ManifestInfo {
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> files;  ///< relative to out_dir
  double duration_s = 0.0;
  std::string config_echo;
  const DivergenceRecord* divergence = nullptr;
};

void write_manifest(const std::filesystem::path& path, const ManifestInfo& info);

}  // namespace gista::app
