#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "idiomlab/inflator.hpp"
#include "idiomlab/intervals.hpp"
#include "idiomlab/lattice.hpp"
#include "idiomlab/nuclei.hpp"
#include "test_util.hpp"

using namespace idiomlab;

namespace {

NucleusLattice chain3_nuclei() {
  return NucleusLattice::build(make_chain(3), 100000);
}

}  // namespace

TEST_CASE("nucleus counts on the desk lattices") {
  CHECK(chain3_nuclei().size() == 4);
  CHECK(NucleusLattice::build(make_chain(4), 100000).size() == 8);
  CHECK(NucleusLattice::build(make_diamond_m3(), 100000).size() == 2);
  CHECK(NucleusLattice::build(make_boolean(2), 100000).size() == 4);
}

TEST_CASE("the nuclei of the 3-chain form the boolean diamond") {
  NucleusLattice nl = chain3_nuclei();
  const FiniteLattice& host = nl.host();
  CHECK(nl.order().digest() == make_boolean(2).digest());
  CHECK(nl.order().is_distributive());

  // Members: identity, join-with-middle, middle-jump, constant top.
  CHECK(nl.index_of(identity_inflator(host)) == nl.bottom_index());
  CHECK(nl.index_of(top_inflator(host)) == nl.top_index());
  CHECK(nl.index_of(u_inflator(host, 1)) >= 0);
  CHECK(nl.index_of(o_inflator(host, 1)) >= 0);
  CHECK(nl.index_of(iota_inflator(host, 1)) == -1);  // not idempotent

  // The join of the two atoms needs the iteration step: the pointwise join
  // is the non-idempotent iota map, whose closure is the top.
  Inflator join = nl.join(u_inflator(host, 1), o_inflator(host, 1));
  CHECK(join == top_inflator(host));
  Inflator meet = nl.meet(u_inflator(host, 1), o_inflator(host, 1));
  CHECK(meet == identity_inflator(host));
}

TEST_CASE("quotient by a nucleus") {
  FiniteLattice c = make_chain(3);
  Quotient q = quotient(c, u_inflator(c, 1));
  REQUIRE(q.lattice.size() == 2);
  // Fixed points are the middle and the top.
  CHECK(q.embed[q.project[0]] == 1);
  for (Elem a = 0; a < c.size(); ++a)
    CHECK(q.embed[q.project[a]] == u_inflator(c, 1).values[a]);
  for (Elem x = 0; x < q.lattice.size(); ++x)
    CHECK(q.project[q.embed[x]] == x);
}

TEST_CASE("chi and xi on the 3-chain") {
  NucleusLattice nl = chain3_nuclei();
  const FiniteLattice& c = nl.host();
  CHECK(chi(nl, 0, 1) == o_inflator(c, 1));
  CHECK(chi(nl, 1, 2) == u_inflator(c, 1));
  CHECK(xi(nl, 0, 1) == u_inflator(c, 1));
  CHECK(xi(nl, 1, 2) == o_inflator(c, 1));

  // Adjoint characterizations, checked against every member.
  for (int k = 0; k < nl.size(); ++k) {
    const Inflator& j = nl.nucleus(k);
    bool fixes = c.meet(j.values[1], 2) == 1;
    CHECK(fixes == pointwise_leq(c, j, chi(nl, 1, 2)));
    bool reaches = c.leq(2, j.values[1]);
    CHECK(reaches == pointwise_leq(c, xi(nl, 1, 2), j));
  }
}

TEST_CASE("inert intervals") {
  NucleusLattice nl = chain3_nuclei();
  CHECK(is_inert(nl, 0, 1));
  CHECK(is_inert(nl, 0, 2));  // chains are uniform, uniform implies inert

  NucleusLattice b2 = NucleusLattice::build(make_boolean(2), 100000);
  Elem a = b2.host().index_of("a"), top = b2.host().top();
  CHECK(!is_inert(b2, 0, top));
  CHECK(is_inert(b2, 0, a));
}

TEST_CASE("gab reaches the top nucleus on desk-scale hosts") {
  // Every interval of a finite lattice sits over a cover chain, so the xi
  // join over critical intervals always climbs to the constant-top nucleus.
  for (const FiniteLattice& L :
       {make_chain(3), make_boolean(2), make_diamond_m3()}) {
    CAPTURE(L.name());
    NucleusLattice nl = NucleusLattice::build(L, 100000);
    Inflator g = gab_inflator(nl);
    CHECK(g == top_inflator(nl.order()));
    GabResult r = gab(nl, nl.nucleus(nl.bottom_index()));
    CHECK(r.value == top_inflator(L));
    CHECK(r.raw_join_dominates);
  }
}

TEST_CASE("points of the nucleus lattice") {
  NucleusLattice nl = chain3_nuclei();
  const FiniteLattice& c = nl.host();
  std::vector<int> pts = points(nl);
  std::set<int> expected = {nl.require(u_inflator(c, 1)),
                            nl.require(o_inflator(c, 1))};
  CHECK(std::set<int>(pts.begin(), pts.end()) == expected);
  // gab moves every point strictly, so all points are G-points here.
  std::vector<int> gp = g_points(nl);
  CHECK(std::set<int>(gp.begin(), gp.end()) == expected);
  // And the G-points are exactly the chi images of the simple intervals.
  std::set<int> chis;
  for (const Interval& iv : simple_intervals(c).items())
    chis.insert(nl.require(chi(nl, iv.lo, iv.hi)));
  CHECK(chis == expected);
}

TEST_CASE("lifted derivatives on the member order") {
  NucleusLattice nl = chain3_nuclei();
  Inflator ls = lift_soc(nl), lc = lift_cbd(nl);
  CHECK(ls.flags.stable);
  CHECK(lc.flags.stable);
  CHECK(pointwise_leq(nl.order(), ls, lc));
  // The member order is the boolean diamond: one soc step tops out.
  CHECK(ls.values[nl.bottom_index()] == nl.top_index());
}

TEST_CASE("join_all folds over member subsets") {
  NucleusLattice nl = chain3_nuclei();
  const FiniteLattice& c = nl.host();
  CHECK(nl.join_all({}) == identity_inflator(c));
  CHECK(nl.join_all({nl.require(u_inflator(c, 1)),
                     nl.require(o_inflator(c, 1))}) == top_inflator(c));
}
