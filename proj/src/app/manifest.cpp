#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "gista/app/commands.hpp"

namespace gista::app {

std::string sha256_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                               EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 init failed");
  }
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), in.gcount());
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return hex.str();
}

void write_manifest(const std::filesystem::path& path, const ManifestInfo& info) {
  nlohmann::json j;
  j["tool"] = "gista";
  j["version"] = kVersion;
  j["config_path"] = info.config_path;
  j["out_dir"] = info.out_dir;
  j["duration_s"] = info.duration_s;
  j["config_echo"] = info.config_echo;
  auto& files = j["files"] = nlohmann::json::array();
  const auto dir = path.parent_path();
  for (const auto& f : info.files) {
    files.push_back({{"name", f},
                     {"sha256", sha256_file(dir / f)},
                     {"bytes", std::filesystem::file_size(dir / f)}});
  }
  if (info.divergence) {
    j["divergence"] = {{"iteration", info.divergence->iteration},
                       {"sample", info.divergence->sample},
                       {"message", info.divergence->message}};
  } else {
    j["divergence"] = nullptr;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace gista::app
