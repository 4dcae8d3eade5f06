#pragma once

#include <string>
#include <vector>

#include "idiomlab/inflator.hpp"
#include "idiomlab/intervals.hpp"
#include "idiomlab/lattice.hpp"
#include "idiomlab/operator_lattice.hpp"

namespace idiomlab {

// The family of all nuclei on a host, with its own lattice structure.
// Meets are pointwise; joins close the pointwise join under iteration.
// Construction verifies, pair by pair, that both routes agree with the
// least-upper-bound structure of the materialized member order, and that the
// member order is distributive; violations throw frame_violation because
// they would mean the family is not the frame it is supposed to be.
class NucleusLattice {
 public:
  static NucleusLattice build(const FiniteLattice& host, long long bound,
                              int lattice_cap = OperatorLattice::kDefaultLatticeCap);

  const FiniteLattice& host() const { return host_; }
  const OperatorLattice& family() const { return family_; }
  // The member order as a lattice: element i is nucleus i.
  const FiniteLattice& order() const { return family_.lattice(); }
  int size() const { return family_.size(); }

  const Inflator& nucleus(int i) const { return family_.members()[i]; }
  int index_of(const Inflator& j) const { return family_.index_of(j); }
  int require(const Inflator& j) const { return family_.require(j); }

  int bottom_index() const { return order().bottom(); }
  int top_index() const { return order().top(); }

  Inflator meet(const Inflator& a, const Inflator& b) const;
  Inflator join(const Inflator& a, const Inflator& b) const;
  // Fold of join over a member subset; empty input yields the identity.
  Inflator join_all(const std::vector<int>& indices) const;

 private:
  FiniteLattice host_ = make_chain(1);
  OperatorLattice family_;
};

// Fixed points of a nucleus with the induced order, the projection of the
// host onto them, and their embedding back.
struct Quotient {
  FiniteLattice lattice = make_chain(1);
  std::vector<Elem> project;  // host element -> quotient element, a = j(a)
  std::vector<Elem> embed;    // quotient element -> host element
};
Quotient quotient(const FiniteLattice& L, const Inflator& j);

// Largest nucleus j with j(a) ^ b = a. The qualifying family is joined and
// the join re-verified against the defining condition; a join that loses the
// condition throws condition_lost_at_join.
Inflator chi(const NucleusLattice& NL, Elem a, Elem b);

// Least nucleus k with b <= k(a). Computed as the pointwise meet of the
// qualifying members and cross-checked against the interval route (the
// inflator induced by the division closure of {[a,b]}); disagreement throws
// route_disagreement.
Inflator xi(const NucleusLattice& NL, Elem a, Elem b);

// An interval is inert when every nontrivial lower piece co-generates the
// same nucleus: chi(a,x) = chi(a,b) for all a < x <= b. Requires a < b.
bool is_inert(const NucleusLattice& NL, Elem a, Elem b);

struct GabResult {
  Inflator value;
  // Whether the join over critical-interval xi nuclei already dominated j
  // before j was joined in.
  bool raw_join_dominates = false;
};

// gab(j): join of j with xi(a,b) over every interval critical for the
// collapsed set of j. Cross-checked against the base route, the inflator
// induced by the division closure of those critical intervals; disagreement
// throws route_disagreement.
GabResult gab(const NucleusLattice& NL, const Inflator& j);

// gab as a self-map on the member order, for iteration and totalizers.
Inflator gab_inflator(const NucleusLattice& NL);

// Members with exactly one upper cover in the member order.
std::vector<int> points(const NucleusLattice& NL);
// Points pi with pi < gab(pi).
std::vector<int> g_points(const NucleusLattice& NL);

// The interval-module derivatives taken on the member order.
Inflator lift_soc(const NucleusLattice& NL);
Inflator lift_cbd(const NucleusLattice& NL);

}  // namespace idiomlab
