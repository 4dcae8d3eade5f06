#pragma once

#include <string>
#include <vector>

#include "idiomlab/dimensions.hpp"
#include "idiomlab/inflator.hpp"
#include "idiomlab/intervals.hpp"
#include "idiomlab/lattice.hpp"
#include "idiomlab/nuclei.hpp"
#include "idiomlab/operator_lattice.hpp"
#include "idiomlab/report.hpp"

namespace idiomlab::io {

// All serializers emit two-space-indented JSON with keys in a fixed order,
// so equal inputs give byte-identical output. Parsers throw Error(bad_input)
// on malformed documents, unknown labels, duplicate labels or duplicate
// cover pairs.

// {"name": ..., "elements": [...], "covers": [[lo, hi], ...]}
std::string lattice_to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const std::string& text,
                                int max_elements = kDefaultMaxElements);

// {"lattice": digest, "map": {label: label, ...}, "flags": {...}}
std::string inflator_to_json(const FiniteLattice& L, const Inflator& d);
Inflator inflator_from_json(const FiniteLattice& L, const std::string& text);

// {"lattice": digest, "level": ..., "intervals": [[lo, hi], ...]}
struct LeveledIntervalSet {
  IntervalSet set;
  std::string level;  // "raw" or a closure level name
};
std::string interval_set_to_json(const FiniteLattice& L, const IntervalSet& B,
                                 const std::string& level);
LeveledIntervalSet interval_set_from_json(const FiniteLattice& L,
                                          const std::string& text);

// {"lattice": digest, "checks": [{"id", "status", "witness"}, ...]}
std::string report_to_json(const std::string& lattice_digest,
                           const std::vector<CheckResult>& checks);

// {"lattice", "notion", "verdict", "steps", "trace"}
std::string dimension_to_json(const DimensionReport& r);
std::string sa_report_to_json(const SAReport& r);

// Member value tables beside the pointwise-order lattice document.
std::string operator_lattice_to_json(const FiniteLattice& host,
                                     const OperatorLattice& F);
std::string nucleus_lattice_to_json(const NucleusLattice& NL);

// {"lattice": digest, "gab": {nucleus_index: result_index, ...}}
std::string gab_table_to_json(const NucleusLattice& NL);

std::string read_file(const std::string& path);   // throws bad_input
void write_file(const std::string& path, const std::string& text);

}  // namespace idiomlab::io
