#pragma once

#include <cstdint>
#include <string>

#include "idiomlab/error.hpp"

namespace idiomlab {

// Knobs shared by the library entry points and the command-line tool.
// All enumerative operations honor these caps and fail loudly when a cap
// would be crossed; nothing is silently truncated.
struct RunConfig {
  int max_lattice_size = 64;          // elements per lattice
  long long max_enumeration = 100000; // members per enumerated operator family
  int second_level_bound = 64;        // host size for operator-on-operator work
  std::string cache_dir;              // empty: caching disabled
  uint64_t seed = 0;                  // seed for randomized witness hunts
  enum class Format { text, json };
  Format format = Format::text;

  void validate() const {
    if (max_lattice_size < 1)
      throw Error(Err::bad_parameter, "max_lattice_size must be positive");
    if (max_enumeration < 1)
      throw Error(Err::bad_parameter, "max_enumeration must be positive");
    if (second_level_bound < 1 || second_level_bound > max_enumeration)
      throw Error(Err::bad_parameter,
                  "second_level_bound must be in [1, max_enumeration]");
  }

  // Applies IDIOMLAB_CACHE_DIR when set in the environment.
  static RunConfig from_env();
};

}  // namespace idiomlab
