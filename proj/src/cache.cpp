#include "idiomlab/cache.hpp"

#include <cstdlib>
#include <filesystem>

#include <json.hpp>

#include "idiomlab/error.hpp"
#include "idiomlab/json_io.hpp"

namespace idiomlab {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

RunConfig RunConfig::from_env() {
  RunConfig cfg;
  if (const char* dir = std::getenv("IDIOMLAB_CACHE_DIR")) cfg.cache_dir = dir;
  return cfg;
}

Cache::Cache(std::string dir) : dir_(std::move(dir)) {}

namespace {

std::string order_guard(const FiniteLattice& L) {
  std::string s;
  s.reserve(L.order_table().size());
  for (uint8_t b : L.order_table()) s += b ? '1' : '0';
  return s;
}

}  // namespace

std::string Cache::key(const FiniteLattice& L, const std::string& operation,
                       const RunConfig& cfg) {
  return L.digest() + "-" + operation + "-" +
         std::to_string(cfg.max_lattice_size) + "-" +
         std::to_string(cfg.max_enumeration) + "-" +
         std::to_string(cfg.second_level_bound) + ".json";
}

std::optional<std::string> Cache::get(const FiniteLattice& L,
                                      const std::string& operation,
                                      const RunConfig& cfg) const {
  if (!enabled()) return std::nullopt;
  fs::path path = fs::path(dir_) / key(L, operation, cfg);
  std::error_code ec;
  if (!fs::exists(path, ec) || ec) return std::nullopt;
  try {
    ordered_json blob = ordered_json::parse(io::read_file(path.string()));
    if (blob.at("order").get<std::string>() != order_guard(L))
      return std::nullopt;  // digest collision; entry is for another lattice
    return blob.at("payload").get<std::string>();
  } catch (...) {
    return std::nullopt;  // unreadable entries are misses, never fatal
  }
}

void Cache::put(const FiniteLattice& L, const std::string& operation,
                const RunConfig& cfg, const std::string& payload) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  ordered_json blob;
  blob["order"] = order_guard(L);
  blob["payload"] = payload;
  fs::path path = fs::path(dir_) / key(L, operation, cfg);
  fs::path tmp = path;
  tmp += ".tmp";
  try {
    io::write_file(tmp.string(), blob.dump(2) + "\n");
    fs::rename(tmp, path, ec);
    if (ec) fs::remove(tmp, ec);
  } catch (...) {
    // A cache that cannot write stays silent; results are recomputed.
  }
}

}  // namespace idiomlab
