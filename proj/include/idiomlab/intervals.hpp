#pragma once

#include <string>
#include <vector>

#include "idiomlab/inflator.hpp"
#include "idiomlab/lattice.hpp"

namespace idiomlab {

// Closed interval [lo, hi] of a host lattice, lo <= hi.
struct Interval {
  Elem lo = 0, hi = 0;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator<(const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  }
};

// A set of intervals over one host, with O(1) membership. Iteration via
// items() is in lexicographic (lo, hi) order, so every derived artifact is
// deterministic.
class IntervalSet {
 public:
  explicit IntervalSet(const FiniteLattice& L);
  IntervalSet(const FiniteLattice& L, const std::vector<Interval>& seed);

  const std::string& host_digest() const { return host_digest_; }
  int host_size() const { return n_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Elem lo, Elem hi) const { return flags_[lo * n_ + hi] != 0; }
  bool contains(const Interval& iv) const { return contains(iv.lo, iv.hi); }
  bool insert(Elem lo, Elem hi);  // true when newly added; validates lo <= hi

  std::vector<Interval> items() const;

  bool subset_of(const IntervalSet& other) const;
  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.host_digest_ == b.host_digest_ && a.flags_ == b.flags_;
  }

  static IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
  static IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

 private:
  std::string host_digest_;
  int n_ = 0;
  int count_ = 0;
  std::vector<uint8_t> flags_;  // flags_[lo*n+hi]
  const FiniteLattice* host_ = nullptr;  // not owned; used only during insert
};

IntervalSet all_intervals(const FiniteLattice& L);
IntervalSet trivial_intervals(const FiniteLattice& L);

// The closure hierarchy. Each level keeps everything the previous one adds:
//   abstract:    closed under the similarity swap [l, l v r] <-> [l ^ r, r]
//   basic:       abstract + subintervals + all trivial intervals
//   congruence:  basic + abutting composition [a,b],[b,c] => [a,c]
//   division:    congruence + per-anchor joins [a, join{x : [a,x] present}]
// (Joining the full fiber over each anchor covers every sub-join because the
// result is subinterval-closed.)
enum class ClosureLevel { abstract, basic, congruence, division };

const char* closure_level_name(ClosureLevel level);

IntervalSet close(const FiniteLattice& L, const IntervalSet& seed,
                  ClosureLevel level);
bool is_closed(const FiniteLattice& L, const IntervalSet& B,
               ClosureLevel level);

// Associated inflator: |B|(a) = join{x : [a,x] in B}. Requires every trivial
// interval (else the map would not be inflationary); throws not_basic when
// they are missing or when the resulting table is not monotone.
Inflator induced_inflator(const FiniteLattice& L, const IntervalSet& B);

// The intervals an inflator collapses: {[a,b] : j(a) = j(b)}. For a nucleus
// this is its division set.
IntervalSet collapsed_intervals(const FiniteLattice& L, const Inflator& j);

// Per-interval classification by direct definition scans.
struct IntervalClass {
  bool trivial = false;          // lo == hi
  bool simple = false;           // exactly the two endpoints
  bool complemented = false;     // every x has a complement inside
  bool atomic = false;           // every lower piece contains an atom over lo
  bool strongly_atomic = false;  // every subinterval is atomic
  bool uniform = false;          // nontrivial, no two disjoint nonzero pieces
};
IntervalClass classify(const FiniteLattice& L, const Interval& iv);

// Classification relative to a basic set B.
struct RelativeClass {
  bool rel_simple = false;        // each x splits: [lo,x] in B or [x,hi] in B
  bool rel_complemented = false;  // complements up to B-trivial gaps
  bool rel_critical = false;      // x > lo forces [x,hi] in B
};
RelativeClass classify_relative(const FiniteLattice& L, const IntervalSet& B,
                                const Interval& iv);

// Distinguished sets.
IntervalSet simple_intervals(const FiniteLattice& L);  // two-element only
IntervalSet smp_set(const FiniteLattice& L);  // simple + trivial intervals
IntervalSet cmp_set(const FiniteLattice& L);  // complemented intervals
IntervalSet sa_set(const FiniteLattice& L);   // strongly atomic intervals
IntervalSet rel_simple_set(const FiniteLattice& L, const IntervalSet& B);
IntervalSet rel_complemented_set(const FiniteLattice& L, const IntervalSet& B);
IntervalSet rel_critical_set(const FiniteLattice& L, const IntervalSet& B);

// The two fundamental derivatives.
Inflator soc(const FiniteLattice& L);  // induced by smp_set
Inflator cbd(const FiniteLattice& L);  // induced by cmp_set

}  // namespace idiomlab
