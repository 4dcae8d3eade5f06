#pragma once

#include <vector>

#include "idiomlab/config.hpp"
#include "idiomlab/lattice.hpp"
#include "idiomlab/report.hpp"

namespace idiomlab {

// Law batteries. Each returned item is one law checked exhaustively at the
// configured bounds: status pass when it held everywhere, fail with a
// witness when it broke, skip with the bound named when an enumeration or
// size cap cut the check off. A handful of survey checks record an observed
// fact in the witness and always pass; their ids say "survey".

std::vector<CheckResult> verify_operator_laws(const FiniteLattice& L,
                                              const RunConfig& cfg);
std::vector<CheckResult> verify_interval_laws(const FiniteLattice& L,
                                              const RunConfig& cfg);
std::vector<CheckResult> verify_nuclei_laws(const FiniteLattice& L,
                                            const RunConfig& cfg);

// The three batteries above plus the totalizer comparison chains.
std::vector<CheckResult> core_suite(const FiniteLattice& L,
                                    const RunConfig& cfg);

// core_suite plus the second-level battery (operators on the operator
// lattice).
std::vector<CheckResult> full_suite(const FiniteLattice& L,
                                    const RunConfig& cfg);

}  // namespace idiomlab
