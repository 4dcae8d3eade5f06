#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "idiomlab/cache.hpp"
#include "idiomlab/config.hpp"
#include "idiomlab/dimensions.hpp"
#include "idiomlab/inflator.hpp"
#include "idiomlab/intervals.hpp"
#include "idiomlab/json_io.hpp"
#include "idiomlab/lattice.hpp"
#include "idiomlab/nuclei.hpp"
#include "idiomlab/operator_lattice.hpp"
#include "test_util.hpp"

using namespace idiomlab;
namespace io = idiomlab::io;
using json = nlohmann::ordered_json;

TEST_CASE("lattice documents round trip") {
  FiniteLattice c = make_chain(3);
  std::string doc = io::lattice_to_json(c);
  FiniteLattice back = io::lattice_from_json(doc);
  CHECK(back.digest() == c.digest());
  CHECK(back.name() == c.name());
  CHECK(back.labels() == c.labels());
  CHECK(io::lattice_to_json(back) == doc);

  json j = json::parse(doc);
  CHECK(j["name"] == "chain(3)");
  CHECK(j["elements"].size() == 3);
  CHECK(j["covers"].size() == 2);
}

TEST_CASE("lattice parser rejects malformed documents") {
  CHECK(thrown_kind([] { io::lattice_from_json("not json"); }) ==
        Err::bad_input);
  CHECK(thrown_kind([] { io::lattice_from_json("[1,2]"); }) == Err::bad_input);
  CHECK(thrown_kind([] {
          io::lattice_from_json(
              R"({"name":"d","elements":["a","a"],"covers":[]})");
        }) == Err::bad_input);
  CHECK(thrown_kind([] {
          io::lattice_from_json(
              R"({"name":"d","elements":["a","b"],"covers":[["a","c"]]})");
        }) == Err::bad_input);
  CHECK(thrown_kind([] {
          io::lattice_from_json(
              R"({"name":"d","elements":["a","b"],)"
              R"("covers":[["a","b"],["a","b"]]})");
        }) == Err::bad_input);
  CHECK(thrown_kind([] {
          io::lattice_from_json(
              R"({"name":"d","elements":["a","b"],"covers":[]})");
        }) == Err::not_a_lattice);
}

TEST_CASE("inflator documents round trip and flags are recomputed") {
  FiniteLattice c = make_chain(3);
  Inflator w = iota_inflator(c, 1);
  std::string doc = io::inflator_to_json(c, w);
  CHECK(io::inflator_from_json(c, doc) == w);

  // Tampered flags in the document are ignored.
  json j = json::parse(doc);
  j["flags"]["nucleus"] = true;
  Inflator back = io::inflator_from_json(c, j.dump());
  CHECK(!back.flags.nucleus);
  CHECK(back == w);

  // A document written against another lattice is refused.
  FiniteLattice b = make_boolean(2);
  std::string other = io::inflator_to_json(b, identity_inflator(b));
  CHECK(thrown_kind([&] { io::inflator_from_json(c, other); }) ==
        Err::host_mismatch);

  CHECK(thrown_kind([&] {
          io::inflator_from_json(c, R"({"lattice":")" + c.digest() +
                                        R"(","map":{"0":"9"}})");
        }) == Err::bad_input);
}

TEST_CASE("interval set documents round trip") {
  FiniteLattice c = make_chain(3);
  IntervalSet s = smp_set(c);
  std::string doc = io::interval_set_to_json(c, s, "raw");
  io::LeveledIntervalSet back = io::interval_set_from_json(c, doc);
  CHECK(back.set == s);
  CHECK(back.level == "raw");
}

TEST_CASE("reports are ordered by check identifier") {
  std::vector<CheckResult> checks;
  checks.push_back({"z-last", CheckResult::Status::pass, ""});
  checks.push_back({"a-first", CheckResult::Status::fail, "boom"});
  std::string doc = io::report_to_json("digest", checks);
  json j = json::parse(doc);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["id"] == "a-first");
  CHECK(j["checks"][1]["id"] == "z-last");
  CHECK(j["checks"][0]["witness"] == "boom");
  CHECK(j["checks"][1]["witness"] == "");
  CHECK(j["lattice"] == "digest");
}

TEST_CASE("dimension and strongly-atomic documents") {
  FiniteLattice c = make_chain(3);
  json dim = json::parse(io::dimension_to_json(d_length(c, soc(c))));
  CHECK(dim["notion"] == "d-length");
  CHECK(dim["verdict"] == true);
  CHECK(dim["steps"] == 2);
  json sa = json::parse(io::sa_report_to_json(strongly_atomic(c)));
  CHECK(sa["verdict"] == true);
  CHECK(sa["by_totalizer"] == true);
}

TEST_CASE("operator family documents") {
  FiniteLattice c = make_chain(3);
  OperatorLattice F = OperatorLattice::enumerate(c, Family::all, 1000);
  json j = json::parse(io::operator_lattice_to_json(c, F));
  CHECK(j["size"] == 5);
  CHECK(j["members"].size() == 5);
  CHECK(j.contains("as_lattice"));

  NucleusLattice nl = NucleusLattice::build(c, 1000);
  json nj = json::parse(io::nucleus_lattice_to_json(nl));
  CHECK(nj["size"] == 4);

  json gj = json::parse(io::gab_table_to_json(nl));
  for (int i = 0; i < nl.size(); ++i)
    CHECK(gj["gab"][std::to_string(i)] == nl.top_index());
}

TEST_CASE("result cache") {
  FiniteLattice c = make_chain(3);
  RunConfig cfg;
  auto dir = std::filesystem::temp_directory_path() /
             ("idiomlab-test-" +
              std::to_string(std::chrono::steady_clock::now()
                                 .time_since_epoch()
                                 .count()));
  cfg.cache_dir = dir.string();

  Cache off("");
  CHECK(!off.enabled());

  Cache cache(cfg.cache_dir);
  REQUIRE(cache.enabled());
  CHECK(!cache.get(c, "op", cfg).has_value());
  cache.put(c, "op", cfg, "payload-bytes");
  auto hit = cache.get(c, "op", cfg);
  REQUIRE(hit.has_value());
  CHECK(*hit == "payload-bytes");

  // The key covers the bounds: a different configuration misses.
  RunConfig other = cfg;
  other.max_enumeration = 7;
  CHECK(!cache.get(c, "op", other).has_value());

  // A corrupted blob is treated as a miss, not an error.
  std::ofstream(dir / Cache::key(c, "op", cfg)) << "garbage";
  CHECK(!cache.get(c, "op", cfg).has_value());

  std::filesystem::remove_all(dir);
}

TEST_CASE("file io") {
  auto path = std::filesystem::temp_directory_path() / "idiomlab-file-test.txt";
  io::write_file(path.string(), "contents\n");
  CHECK(io::read_file(path.string()) == "contents\n");
  std::filesystem::remove(path);
  CHECK(thrown_kind([&] { io::read_file(path.string()); }) == Err::bad_input);
}
