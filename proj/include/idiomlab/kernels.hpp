#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idiomlab/lattice.hpp"

// Data-parallel inner loops, each in two variants: a plain serial reference
// and an OpenMP version. Both produce bit-identical results (witness scans
// reduce to the lexicographically-first hit; extrema reduce through
// associative-commutative table operations), so the dispatchers are free to
// pick either. Tests pin the variants against each other; bench/ times them.

namespace idiomlab::kernels {

bool parallel_enabled();
void set_parallel(bool on);
int worker_count();

// --- law scans -------------------------------------------------------------

// First (a,b,c) with a<=b and (a v c) ^ b != a v (c ^ b), scan order a,b,c.
std::optional<Triple> modular_violation_serial(const FiniteLattice& L);
std::optional<Triple> modular_violation_parallel(const FiniteLattice& L);
std::optional<Triple> modular_violation(const FiniteLattice& L);

// First (a,b,c) with a ^ (b v c) != (a ^ b) v (a ^ c).
std::optional<Triple> distributive_violation_serial(const FiniteLattice& L);
std::optional<Triple> distributive_violation_parallel(const FiniteLattice& L);
std::optional<Triple> distributive_violation(const FiniteLattice& L);

// --- map enumeration ---------------------------------------------------------

// All value tables of inflationary monotone self-maps, in lexicographic
// order. Throws enumeration_bound when the count would exceed `bound`.
std::vector<std::vector<Elem>> inflationary_maps_serial(const FiniteLattice& L,
                                                        long long bound);
std::vector<std::vector<Elem>> inflationary_maps_parallel(
    const FiniteLattice& L, long long bound);
std::vector<std::vector<Elem>> inflationary_maps(const FiniteLattice& L,
                                                 long long bound);

// --- per-member classification ----------------------------------------------

struct MapFlags {
  bool stable = false;      // d(x) ^ y <= d(x ^ y)
  bool prenucleus = false;  // d(x ^ y) = d(x) ^ d(y)
  bool idempotent = false;  // d(d(x)) = d(x)
};

std::vector<MapFlags> map_flags_serial(const FiniteLattice& L,
                                       const std::vector<std::vector<Elem>>& t);
std::vector<MapFlags> map_flags_parallel(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& t);
std::vector<MapFlags> map_flags(const FiniteLattice& L,
                                const std::vector<std::vector<Elem>>& t);

// --- pointwise order matrix ---------------------------------------------------

// leq[i*m+j] = 1 iff tables[i] <= tables[j] pointwise in L.
std::vector<uint8_t> pointwise_order_serial(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& tables);
std::vector<uint8_t> pointwise_order_parallel(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& tables);
std::vector<uint8_t> pointwise_order(const FiniteLattice& L,
                                     const std::vector<std::vector<Elem>>& t);

// --- screened extremum --------------------------------------------------------

enum class Reduce { meet, join };

// Pointwise meet/join over {z in members : z(d(a)) == target(a) for all a},
// where target is the constant-top table when want_top, else d itself.
// nullopt when no member qualifies.
std::optional<std::vector<Elem>> screened_extremum_serial(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& members,
    const std::vector<Elem>& d, bool want_top, Reduce reduce);
std::optional<std::vector<Elem>> screened_extremum_parallel(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& members,
    const std::vector<Elem>& d, bool want_top, Reduce reduce);
std::optional<std::vector<Elem>> screened_extremum(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& members,
    const std::vector<Elem>& d, bool want_top, Reduce reduce);

}  // namespace idiomlab::kernels
