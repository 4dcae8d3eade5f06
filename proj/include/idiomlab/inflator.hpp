#pragma once

#include <map>
#include <string>
#include <vector>

#include "idiomlab/lattice.hpp"

namespace idiomlab {

struct InflatorFlags {
  bool stable = false;      // d(x) ^ y <= d(x ^ y)
  bool prenucleus = false;  // d(x ^ y) = d(x) ^ d(y); implies stable
  bool idempotent = false;  // d(d(x)) = d(x)
  bool nucleus = false;     // prenucleus and idempotent
};

// Inflationary monotone self-map of a host lattice, stored as a value table.
// `host` is the host's digest; flags are computed at construction.
struct Inflator {
  std::string host;
  std::vector<Elem> values;
  InflatorFlags flags;

  Elem operator()(Elem a) const { return values[a]; }

  friend bool operator==(const Inflator& a, const Inflator& b) {
    return a.host == b.host && a.values == b.values;
  }
};

InflatorFlags compute_flags(const FiniteLattice& L,
                            const std::vector<Elem>& values);

// Validates inflationary + monotone (errors carry a witness) and fills flags.
Inflator make_inflator(const FiniteLattice& L, std::vector<Elem> values);
Inflator make_inflator(const FiniteLattice& L,
                       const std::map<std::string, std::string>& table);

Inflator identity_inflator(const FiniteLattice& L);
Inflator top_inflator(const FiniteLattice& L);
// a |-> top when a >= b, else a. The totalizer of anything with value b at
// the bottom.
Inflator o_inflator(const FiniteLattice& L, Elem b);
// b |-> a v b. Idempotent; a nucleus on distributive hosts.
Inflator u_inflator(const FiniteLattice& L, Elem a);
// bottom |-> a, everything else |-> top. The top of a's totalizer class.
Inflator iota_inflator(const FiniteLattice& L, Elem a);

void require_same_host(const Inflator& d, const Inflator& k);
void require_host(const FiniteLattice& L, const Inflator& d);

// (d k)(a) = d(k(a)): k runs first. Composition of inflators is an inflator.
Inflator compose(const FiniteLattice& L, const Inflator& d, const Inflator& k);

bool pointwise_leq(const FiniteLattice& L, const Inflator& a, const Inflator& b);

// A family is directed when every pair has an upper bound inside the family.
bool is_directed_family(const FiniteLattice& L,
                        const std::vector<Inflator>& family);

// Pointwise extrema of a non-empty family. Flags are recomputed from the
// result table; callers interested in the directed-join law compare against
// `is_directed_family` separately.
Inflator pointwise_meet(const FiniteLattice& L,
                        const std::vector<Inflator>& family);
Inflator pointwise_join(const FiniteLattice& L,
                        const std::vector<Inflator>& family);

struct ClosurePower {
  Inflator closure;  // least idempotent power
  int steps;         // least k >= 1 with d^k = d^(k+1)
};

// Iterated composition to the fixed table. Terminates on finite hosts.
ClosurePower infty(const FiniteLattice& L, const Inflator& d);

// Least z with z(d(a)) = top for all a; closed form o_inflator(d(bottom)).
Inflator totalizer(const FiniteLattice& L, const Inflator& d);

// Greatest z fixing the image of d pointwise:
// e(d)(a) = meet of { b in image(d) : a <= b }, empty meet = top.
Inflator equalizer(const FiniteLattice& L, const Inflator& d);

}  // namespace idiomlab
