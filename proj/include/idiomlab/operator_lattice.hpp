#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idiomlab/inflator.hpp"
#include "idiomlab/lattice.hpp"

namespace idiomlab {

// Which slice of the inflationary monotone maps on a host to enumerate.
enum class Family {
  all,         // every inflator
  stable,      // d(x) meet y <= d(x meet y)
  prenucleus,  // d(x meet y) == d(x) meet d(y)
  idempotent,  // d(d(x)) == d(x)
  nucleus,     // idempotent prenucleus
  totalizer,   // maps of the form a |-> top if a >= b, else a
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// A fully enumerated family of inflators on one host, held in the
// lexicographic order of their value tables so member indices are stable
// across runs.  When the family is small enough its pointwise order is
// materialized as a FiniteLattice whose element i is members[i].
class OperatorLattice {
 public:
  static OperatorLattice enumerate(const FiniteLattice& host, Family family,
                                   long long enumeration_bound,
                                   int lattice_cap = kDefaultLatticeCap);

  // Largest member table count for which the pointwise order is built as a
  // FiniteLattice; past it only the member list is kept.
  static constexpr int kDefaultLatticeCap = 512;

  Family family() const { return family_; }
  const std::string& host_digest() const { return host_digest_; }
  const std::vector<Inflator>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  // Index of an inflator's value table among the members, or -1.
  int index_of(const std::vector<Elem>& values) const;
  int index_of(const Inflator& d) const;
  // Same, but a missing member throws member_missing.
  int require(const Inflator& d) const;

  bool has_lattice() const { return table_ != nullptr; }
  const FiniteLattice& lattice() const;  // throws size_bound when not built

  // Pointwise-extremal member of the sub-family selected by `keep` (indices
  // into members()).  Computed by brute screening: the fold of all selected
  // tables, which for meet-closed / join-closed families lands back in the
  // family.  Empty selection throws empty_family.
  Inflator brute_meet(const FiniteLattice& host,
                      const std::vector<int>& keep) const;
  Inflator brute_join(const FiniteLattice& host,
                      const std::vector<int>& keep) const;

  // Least member above d, and greatest member below d, in the pointwise
  // order, found by screening every member.  nullopt when no member is
  // comparable on the required side.
  std::optional<Inflator> least_above(const FiniteLattice& host,
                                      const Inflator& d) const;
  std::optional<Inflator> greatest_below(const FiniteLattice& host,
                                         const Inflator& d) const;

 private:
  Family family_ = Family::all;
  std::string host_digest_;
  std::vector<Inflator> members_;
  std::shared_ptr<const FiniteLattice> table_;
};

// Order-theoretic predicates about one member inside an enumerated family.
// The irreducible form is strictly stronger than the prime form here; both
// exclude the top member.
struct OrderPredicates {
  bool meet_prime = false;        // k meet l == d forces k == d or l == d
  bool meet_irreducible = false;  // k meet l <= d forces k <= d or l <= d
};

// Both predicates for members()[index], evaluated against the family's
// materialized pointwise lattice.
OrderPredicates order_predicates(const OperatorLattice& fam,
                                 const FiniteLattice& host, int index);

// Essential-below test inside the family's pointwise lattice: x is
// essential in the interval [lo, hi] when x meet y > lo for every y in
// (lo, hi].  Indices refer to members().
bool essential_in_interval(const OperatorLattice& fam, int x, int lo, int hi);

// The two ends of a totalizer class: everything with the same totalizer as
// d sits pointwise between join-by-d(bottom) and the bottom-jump map.
struct TotClassBounds {
  Inflator lower;  // b |-> d(bottom) join b
  Inflator upper;  // bottom |-> d(bottom), everything else |-> top
};
TotClassBounds tot_class_bounds(const FiniteLattice& host, const Inflator& d);

// Brute-force routes for the closed forms in inflator.hpp: fold the whole
// enumerated family through the screening kernel. `maps` must be the
// Family::all enumeration on the host.
//   totalizer: meet of every z with z(d(a)) = top for all a
//   equalizer: join of every z with z(d(a)) = d(a) for all a
Inflator brute_totalizer(const FiniteLattice& host, const OperatorLattice& maps,
                         const Inflator& d);
Inflator brute_equalizer(const FiniteLattice& host, const OperatorLattice& maps,
                         const Inflator& d);

}  // namespace idiomlab
