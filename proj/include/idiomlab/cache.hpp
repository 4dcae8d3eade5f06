#pragma once

#include <optional>
#include <string>

#include "idiomlab/config.hpp"
#include "idiomlab/lattice.hpp"

namespace idiomlab {

// File-backed result cache holding JSON blobs. Keys combine the host
// digest, an operation tag and the configured bounds; a digest collision
// cannot serve a wrong entry because each blob carries the host's order
// table, which is compared on every lookup.
class Cache {
 public:
  // An empty directory disables the cache: get always misses, put is a
  // no-op.
  explicit Cache(std::string dir);

  bool enabled() const { return !dir_.empty(); }

  std::optional<std::string> get(const FiniteLattice& L,
                                 const std::string& operation,
                                 const RunConfig& cfg) const;
  void put(const FiniteLattice& L, const std::string& operation,
           const RunConfig& cfg, const std::string& payload) const;

  static std::string key(const FiniteLattice& L, const std::string& operation,
                         const RunConfig& cfg);

 private:
  std::string dir_;
};

}  // namespace idiomlab
