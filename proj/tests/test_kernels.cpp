#include <doctest.h>

#include <vector>

#include "idiomlab/kernels.hpp"
#include "idiomlab/lattice.hpp"
#include "test_util.hpp"

using namespace idiomlab;
namespace k = idiomlab::kernels;

namespace {

std::vector<FiniteLattice> hosts() {
  std::vector<FiniteLattice> out;
  out.push_back(make_chain(4));
  out.push_back(make_boolean(2));
  out.push_back(make_boolean(3));
  out.push_back(make_diamond_m3());
  out.push_back(make_pentagon_n5());
  out.push_back(make_product(make_chain(2), make_chain(3)));
  out.push_back(random_modular_lattice(1));
  out.push_back(random_modular_lattice(2));
  return out;
}

bool same_witness(const std::optional<Triple>& a,
                  const std::optional<Triple>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->a == b->a && a->b == b->b && a->c == b->c;
}

}  // namespace

TEST_CASE("violation scans: serial and parallel variants agree") {
  for (const FiniteLattice& L : hosts()) {
    CAPTURE(L.name());
    CHECK(same_witness(k::modular_violation_serial(L),
                       k::modular_violation_parallel(L)));
    CHECK(same_witness(k::distributive_violation_serial(L),
                       k::distributive_violation_parallel(L)));
    CHECK(same_witness(k::modular_violation(L), k::modular_violation_serial(L)));
  }
}

TEST_CASE("map enumeration: variants agree, output is sorted, counts are known") {
  for (const FiniteLattice& L : hosts()) {
    CAPTURE(L.name());
    auto s = k::inflationary_maps_serial(L, 100000);
    auto p = k::inflationary_maps_parallel(L, 100000);
    REQUIRE(s == p);
    for (size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
    for (const auto& t : s) {
      for (Elem a = 0; a < L.size(); ++a) CHECK(L.leq(a, t[a]));
    }
  }
  // Inflationary monotone self-map counts on chains are the Catalan numbers.
  CHECK(k::inflationary_maps(make_chain(2), 1000).size() == 2);
  CHECK(k::inflationary_maps(make_chain(3), 1000).size() == 5);
  CHECK(k::inflationary_maps(make_chain(4), 1000).size() == 14);
  CHECK(k::inflationary_maps(make_chain(5), 1000).size() == 42);
  CHECK(k::inflationary_maps(make_boolean(2), 1000).size() == 9);
  CHECK(k::inflationary_maps(make_diamond_m3(), 1000).size() == 15);
  CHECK(k::inflationary_maps(make_boolean(3), 1000).size() == 216);
}

TEST_CASE("map enumeration honors the bound in both variants") {
  FiniteLattice b3 = make_boolean(3);
  CHECK(thrown_kind([&] { k::inflationary_maps_serial(b3, 10); }) ==
        Err::enumeration_bound);
  CHECK(thrown_kind([&] { k::inflationary_maps_parallel(b3, 10); }) ==
        Err::enumeration_bound);
}

TEST_CASE("flag classification: variants agree") {
  for (const FiniteLattice& L : hosts()) {
    CAPTURE(L.name());
    auto maps = k::inflationary_maps(L, 100000);
    auto fs = k::map_flags_serial(L, maps);
    auto fp = k::map_flags_parallel(L, maps);
    REQUIRE(fs.size() == fp.size());
    for (size_t i = 0; i < fs.size(); ++i) {
      CHECK(fs[i].stable == fp[i].stable);
      CHECK(fs[i].prenucleus == fp[i].prenucleus);
      CHECK(fs[i].idempotent == fp[i].idempotent);
      // A prenucleus is stable: half of the meet identity is the inequality.
      if (fs[i].prenucleus) CHECK(fs[i].stable);
    }
  }
}

TEST_CASE("pointwise order matrix: variants agree and it is a partial order") {
  for (const FiniteLattice& L : hosts()) {
    CAPTURE(L.name());
    auto maps = k::inflationary_maps(L, 100000);
    auto ms = k::pointwise_order_serial(L, maps);
    auto mp = k::pointwise_order_parallel(L, maps);
    REQUIRE(ms == mp);
    const int m = static_cast<int>(maps.size());
    for (int i = 0; i < m; ++i) {
      CHECK(ms[i * m + i] == 1);
      for (int j = 0; j < m; ++j)
        if (i != j && ms[i * m + j]) CHECK(ms[j * m + i] == 0);
    }
  }
}

TEST_CASE("screened extremum: variants agree across all modes") {
  for (const FiniteLattice& L : hosts()) {
    CAPTURE(L.name());
    auto maps = k::inflationary_maps(L, 100000);
    for (const auto& d : maps) {
      for (bool want_top : {true, false}) {
        for (k::Reduce r : {k::Reduce::meet, k::Reduce::join}) {
          auto a = k::screened_extremum_serial(L, maps, d, want_top, r);
          auto b = k::screened_extremum_parallel(L, maps, d, want_top, r);
          CHECK(a == b);
        }
      }
    }
  }
}

TEST_CASE("parallel toggle steers the dispatchers") {
  FiniteLattice L = make_boolean(3);
  CHECK(k::worker_count() >= 1);
  bool before = k::parallel_enabled();
  k::set_parallel(false);
  auto a = k::inflationary_maps(L, 1000);
  k::set_parallel(true);
  auto b = k::inflationary_maps(L, 1000);
  k::set_parallel(before);
  CHECK(a == b);
}
