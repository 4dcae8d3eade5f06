#include <doctest.h>

#include <set>

#include "idiomlab/lattice.hpp"
#include "test_util.hpp"

using namespace idiomlab;

TEST_CASE("chain construction and tables") {
  FiniteLattice c = make_chain(3);
  REQUIRE(c.size() == 3);
  CHECK(c.bottom() == 0);
  CHECK(c.top() == 2);
  CHECK(c.label(1) == "1");
  CHECK(c.leq(0, 2));
  CHECK(!c.leq(2, 0));
  CHECK(c.meet(1, 2) == 1);
  CHECK(c.join(0, 1) == 1);
  CHECK(c.height(0) == 0);
  CHECK(c.height(2) == 2);
  CHECK(c.is_modular());
  CHECK(c.is_distributive());

  auto covers = c.cover_pairs();
  REQUIRE(covers.size() == 2);
  CHECK(covers[0] == std::make_pair(0, 1));
  CHECK(covers[1] == std::make_pair(1, 2));
  CHECK(c.covers(0, 1));
  CHECK(!c.covers(0, 2));
}

TEST_CASE("boolean lattice") {
  FiniteLattice b = make_boolean(2);
  REQUIRE(b.size() == 4);
  Elem a = b.index_of("a"), bb = b.index_of("b");
  CHECK(b.meet(a, bb) == b.bottom());
  CHECK(b.join(a, bb) == b.top());
  CHECK(b.is_modular());
  CHECK(b.is_distributive());
  CHECK(make_boolean(3).size() == 8);
}

TEST_CASE("diamond is modular but not distributive") {
  FiniteLattice m3 = make_diamond_m3();
  REQUIRE(m3.size() == 5);
  CHECK(m3.is_modular());
  CHECK(!m3.is_distributive());
  REQUIRE(m3.distributive_witness().has_value());
  Triple w = *m3.distributive_witness();
  CHECK(m3.meet(w.a, m3.join(w.b, w.c)) !=
        m3.join(m3.meet(w.a, w.b), m3.meet(w.a, w.c)));
}

TEST_CASE("pentagon is not modular and the witness is genuine") {
  FiniteLattice n5 = make_pentagon_n5();
  CHECK(!n5.is_modular());
  REQUIRE(n5.modular_witness().has_value());
  Triple w = *n5.modular_witness();
  REQUIRE(n5.leq(w.a, w.b));
  CHECK(n5.meet(n5.join(w.a, w.c), w.b) !=
        n5.join(w.a, n5.meet(w.c, w.b)));
}

TEST_CASE("product lattice") {
  FiniteLattice p = make_product(make_chain(2), make_chain(3));
  REQUIRE(p.size() == 6);
  CHECK(p.is_modular());
  CHECK(p.is_distributive());
  CHECK(p.height(p.top()) == 3);
  // Same construction, same digest.
  CHECK(p.digest() == make_product(make_chain(2), make_chain(3)).digest());
}

TEST_CASE("digest is structural") {
  CHECK(make_chain(3).digest() == make_chain(3).digest());
  CHECK(make_chain(3).digest() != make_chain(4).digest());
  CHECK(make_chain(4).digest() != make_boolean(2).digest());
  // An interval of a chain is again a chain; labels differ, structure equal.
  FiniteLattice sub = make_interval_sublattice(make_chain(5), 1, 3);
  REQUIRE(sub.size() == 3);
  CHECK(sub.digest() == make_chain(3).digest());
}

TEST_CASE("meet_all and join_all fold with the right units") {
  FiniteLattice b = make_boolean(2);
  CHECK(b.meet_all({}) == b.top());
  CHECK(b.join_all({}) == b.bottom());
  CHECK(b.join_all({b.index_of("a"), b.index_of("b")}) == b.top());
  CHECK(b.meet_all({b.index_of("a"), b.top()}) == b.index_of("a"));
}

TEST_CASE("linear extension respects the order") {
  FiniteLattice m3 = make_diamond_m3();
  auto order = m3.by_linear_extension();
  REQUIRE(static_cast<int>(order.size()) == m3.size());
  std::vector<int> pos(m3.size());
  for (int i = 0; i < m3.size(); ++i) pos[order[i]] = i;
  for (Elem a = 0; a < m3.size(); ++a)
    for (Elem b = 0; b < m3.size(); ++b)
      if (a != b && m3.leq(a, b)) CHECK(pos[a] < pos[b]);
}

TEST_CASE("from_covers rejects malformed input") {
  CHECK(thrown_kind([] {
          FiniteLattice::from_covers("dup", {"a", "a"}, {});
        }) == Err::bad_input);
  CHECK(thrown_kind([] {
          FiniteLattice::from_covers("unknown", {"a", "b"}, {{"a", "c"}});
        }) == Err::bad_input);
  CHECK(thrown_kind([] {
          FiniteLattice::from_covers("dup-cover", {"a", "b"},
                                     {{"a", "b"}, {"a", "b"}});
        }) == Err::bad_input);
  CHECK(thrown_kind([] {
          FiniteLattice::from_covers("cycle", {"a", "b"},
                                     {{"a", "b"}, {"b", "a"}});
        }) == Err::not_a_poset);
  // Two incomparable maximal elements: the pair has no join.
  CHECK(thrown_kind([] {
          FiniteLattice::from_covers("vee", {"0", "a", "b"},
                                     {{"0", "a"}, {"0", "b"}});
        }) == Err::not_a_lattice);
  // Benzene ring: a v b has two minimal upper bounds.
  CHECK(thrown_kind([] {
          FiniteLattice::from_covers(
              "benzene", {"0", "a", "b", "c", "d", "1"},
              {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
               {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
        }) == Err::not_a_lattice);
  CHECK(thrown_kind([] { make_chain(10, 4); }) == Err::size_bound);
}

TEST_CASE("family expression grammar") {
  CHECK(generate_family("chain(4)").digest() == make_chain(4).digest());
  CHECK(generate_family("boolean(2)").digest() == make_boolean(2).digest());
  CHECK(generate_family("diamond_m3").size() == 5);
  CHECK(generate_family("pentagon_n5").size() == 5);
  CHECK(generate_family("product(chain(2),chain(3))").size() == 6);
  CHECK(generate_family("interval_sublattice(chain(5),1,3)").digest() ==
        make_chain(3).digest());
  CHECK(thrown_kind([] { generate_family("nosuch(3)"); }) ==
        Err::bad_parameter);
  CHECK(thrown_kind([] { generate_family("chain(3"); }) == Err::bad_parameter);
  CHECK(thrown_kind([] { generate_family("chain(0)"); }) ==
        Err::bad_parameter);
}

TEST_CASE("random modular lattices are modular, small and reproducible") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    FiniteLattice L = random_modular_lattice(seed);
    CHECK(L.is_modular());
    CHECK(L.size() <= 8);
    CHECK(L.digest() == random_modular_lattice(seed).digest());
  }
  // The generator explores more than one shape.
  std::set<std::string> digests;
  for (uint64_t seed = 0; seed < 25; ++seed)
    digests.insert(random_modular_lattice(seed).digest());
  CHECK(digests.size() > 3);
}

TEST_CASE("label lookup") {
  FiniteLattice c = make_chain(3);
  CHECK(c.index_of("2") == 2);
  CHECK(!c.find("nope").has_value());
  CHECK(thrown_kind([&] { c.index_of("nope"); }) == Err::bad_input);
}
