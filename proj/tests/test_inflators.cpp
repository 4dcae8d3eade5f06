#include <doctest.h>

#include <map>
#include <vector>

#include "idiomlab/inflator.hpp"
#include "idiomlab/lattice.hpp"
#include "test_util.hpp"

using namespace idiomlab;

// On the 3-chain 0 < 1 < 2 the five inflators are, as value tables:
//   identity {0,1,2}, join-with-middle {1,1,2}, middle-jump {0,2,2},
//   iota-middle {1,2,2}, constant-top {2,2,2}.

TEST_CASE("construction validates and classifies") {
  FiniteLattice c = make_chain(3);
  Inflator w = make_inflator(c, std::vector<Elem>{1, 2, 2});
  CHECK(w.host == c.digest());
  CHECK(w.flags.stable);
  CHECK(w.flags.prenucleus);
  CHECK(!w.flags.idempotent);
  CHECK(!w.flags.nucleus);
  CHECK(w(0) == 1);

  Inflator v = make_inflator(c, std::vector<Elem>{0, 2, 2});
  CHECK(v.flags.nucleus);

  CHECK(thrown_kind([&] { make_inflator(c, std::vector<Elem>{0, 0, 2}); }) ==
        Err::not_inflationary);
  CHECK(thrown_kind([&] { make_inflator(c, std::vector<Elem>{2, 1, 2}); }) ==
        Err::not_monotone);
  CHECK(thrown_kind([&] { make_inflator(c, std::vector<Elem>{0, 1}); }) ==
        Err::bad_input);
}

TEST_CASE("construction from a label map") {
  FiniteLattice c = make_chain(3);
  Inflator w = make_inflator(
      c, std::map<std::string, std::string>{{"0", "1"}, {"1", "2"}, {"2", "2"}});
  CHECK(w.values == std::vector<Elem>{1, 2, 2});
}

TEST_CASE("named inflators") {
  FiniteLattice c = make_chain(3);
  CHECK(identity_inflator(c).values == std::vector<Elem>{0, 1, 2});
  CHECK(top_inflator(c).values == std::vector<Elem>{2, 2, 2});
  CHECK(o_inflator(c, 1).values == std::vector<Elem>{0, 2, 2});
  CHECK(u_inflator(c, 1).values == std::vector<Elem>{1, 1, 2});
  CHECK(iota_inflator(c, 1).values == std::vector<Elem>{1, 2, 2});
  CHECK(o_inflator(c, 0).values == std::vector<Elem>{2, 2, 2});
  CHECK(o_inflator(c, 2).values == std::vector<Elem>{0, 1, 2});
  CHECK(u_inflator(c, 1).flags.nucleus);
  CHECK(o_inflator(c, 1).flags.nucleus);
}

TEST_CASE("composition applies the second argument first") {
  FiniteLattice c = make_chain(3);
  Inflator um = u_inflator(c, 1), v = o_inflator(c, 1);
  CHECK(compose(c, v, um).values == std::vector<Elem>{2, 2, 2});
  CHECK(compose(c, um, v).values == std::vector<Elem>{1, 2, 2});
}

TEST_CASE("pointwise order and bounds") {
  FiniteLattice c = make_chain(3);
  Inflator id = identity_inflator(c), um = u_inflator(c, 1),
           v = o_inflator(c, 1), w = iota_inflator(c, 1);
  CHECK(pointwise_leq(c, id, w));
  CHECK(!pointwise_leq(c, w, id));
  CHECK(!pointwise_leq(c, um, v));
  CHECK(!pointwise_leq(c, v, um));
  CHECK(pointwise_meet(c, {um, v}) == id);
  CHECK(pointwise_join(c, {um, v}) == w);
  CHECK(thrown_kind([&] { pointwise_meet(c, {}); }) == Err::empty_family);
}

TEST_CASE("directed family recognition") {
  FiniteLattice c = make_chain(3);
  Inflator id = identity_inflator(c), um = u_inflator(c, 1),
           v = o_inflator(c, 1), w = iota_inflator(c, 1);
  CHECK(is_directed_family(c, {id, um, w}));
  CHECK(!is_directed_family(c, {id, um, v}));
}

TEST_CASE("iteration to the closure") {
  FiniteLattice c = make_chain(3);
  Inflator w = iota_inflator(c, 1);
  ClosurePower p = infty(c, w);
  CHECK(p.closure == top_inflator(c));
  CHECK(p.steps == 2);
  ClosurePower q = infty(c, u_inflator(c, 1));
  CHECK(q.closure == u_inflator(c, 1));
  CHECK(q.steps == 1);
}

TEST_CASE("totalizer closed form on the 3-chain") {
  FiniteLattice c = make_chain(3);
  Inflator w = iota_inflator(c, 1);
  CHECK(totalizer(c, w) == o_inflator(c, 1));
  CHECK(totalizer(c, identity_inflator(c)) == top_inflator(c));
  CHECK(totalizer(c, top_inflator(c)) == identity_inflator(c));
  // Antitone spot check.
  CHECK(pointwise_leq(c, totalizer(c, w), totalizer(c, identity_inflator(c))));
  // The totalizer genuinely sends d to the constant-top map.
  CHECK(compose(c, totalizer(c, w), w) == top_inflator(c));
}

TEST_CASE("equalizer closed form on the 3-chain") {
  FiniteLattice c = make_chain(3);
  Inflator w = iota_inflator(c, 1);
  Inflator e = equalizer(c, w);
  CHECK(e == u_inflator(c, 1));
  CHECK(e.flags.idempotent);
  CHECK(pointwise_leq(c, e, w));
  CHECK(compose(c, e, w) == w);
  // Idempotents are their own equalizer.
  CHECK(equalizer(c, o_inflator(c, 1)) == o_inflator(c, 1));
}

TEST_CASE("host discipline") {
  FiniteLattice c = make_chain(3), b = make_boolean(2);
  Inflator d = identity_inflator(b);
  CHECK(thrown_kind([&] { require_host(c, d); }) == Err::host_mismatch);
  CHECK(thrown_kind([&] {
          require_same_host(identity_inflator(c), d);
        }) == Err::host_mismatch);
  CHECK(thrown_kind([&] { compose(c, identity_inflator(c), d); }) ==
        Err::host_mismatch);
}
