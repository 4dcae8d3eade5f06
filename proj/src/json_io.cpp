#include "idiomlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "idiomlab/error.hpp"

namespace idiomlab::io {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Err::bad_input, e.what());
  }
}

const ordered_json& field(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw Error(Err::bad_input, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field(j, key);
  if (!v.is_string())
    throw Error(Err::bad_input, std::string("field \"") + key +
                                    "\" must be a string");
  return v.get<std::string>();
}

void check_host(const FiniteLattice& L, const ordered_json& j) {
  std::string digest = string_field(j, "lattice");
  if (digest != L.digest())
    throw Error(Err::host_mismatch, "document was written for lattice " +
                                        digest + ", not " + L.digest());
}

ordered_json flags_json(const InflatorFlags& f) {
  ordered_json out;
  out["stable"] = f.stable;
  out["prenucleus"] = f.prenucleus;
  out["idempotent"] = f.idempotent;
  out["nucleus"] = f.nucleus;
  return out;
}

ordered_json interval_pairs(const FiniteLattice& L, const IntervalSet& B) {
  ordered_json arr = ordered_json::array();
  for (const Interval& iv : B.items())
    arr.push_back({L.label(iv.lo), L.label(iv.hi)});
  return arr;
}

ordered_json lattice_json(const FiniteLattice& L) {
  ordered_json out;
  out["name"] = L.name();
  out["elements"] = L.labels();
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : L.cover_pairs())
    covers.push_back({L.label(lo), L.label(hi)});
  out["covers"] = std::move(covers);
  return out;
}

ordered_json member_tables(const FiniteLattice& host,
                           const std::vector<Inflator>& members) {
  ordered_json arr = ordered_json::array();
  for (const Inflator& d : members) {
    ordered_json row = ordered_json::array();
    for (Elem a = 0; a < host.size(); ++a) row.push_back(host.label(d(a)));
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

std::string lattice_to_json(const FiniteLattice& L) {
  return lattice_json(L).dump(kIndent) + "\n";
}

FiniteLattice lattice_from_json(const std::string& text, int max_elements) {
  ordered_json j = parse(text);
  std::string name = string_field(j, "name");

  const ordered_json& elems = field(j, "elements");
  if (!elems.is_array())
    throw Error(Err::bad_input, "\"elements\" must be an array of strings");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& e : elems) {
    if (!e.is_string())
      throw Error(Err::bad_input, "\"elements\" must be an array of strings");
    std::string s = e.get<std::string>();
    if (!seen.insert(s).second)
      throw Error(Err::bad_input, "duplicate element label \"" + s + "\"");
    labels.push_back(std::move(s));
  }

  const ordered_json& cov = field(j, "covers");
  if (!cov.is_array())
    throw Error(Err::bad_input, "\"covers\" must be an array of label pairs");
  std::vector<std::pair<std::string, std::string>> covers;
  std::set<std::pair<std::string, std::string>> seen_pairs;
  for (const auto& p : cov) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
        !p[1].is_string())
      throw Error(Err::bad_input, "\"covers\" must be an array of label pairs");
    std::pair<std::string, std::string> pr{p[0].get<std::string>(),
                                           p[1].get<std::string>()};
    if (!seen.count(pr.first))
      throw Error(Err::bad_input, "cover uses unknown label \"" + pr.first +
                                      "\"");
    if (!seen.count(pr.second))
      throw Error(Err::bad_input, "cover uses unknown label \"" + pr.second +
                                      "\"");
    if (!seen_pairs.insert(pr).second)
      throw Error(Err::bad_input, "duplicate cover pair [\"" + pr.first +
                                      "\", \"" + pr.second + "\"]");
    covers.push_back(std::move(pr));
  }

  return FiniteLattice::from_covers(std::move(name), std::move(labels),
                                    std::move(covers), max_elements);
}

std::string inflator_to_json(const FiniteLattice& L, const Inflator& d) {
  require_host(L, d);
  ordered_json out;
  out["lattice"] = L.digest();
  ordered_json map;
  for (Elem a = 0; a < L.size(); ++a) map[L.label(a)] = L.label(d(a));
  out["map"] = std::move(map);
  out["flags"] = flags_json(d.flags);
  return out.dump(kIndent) + "\n";
}

Inflator inflator_from_json(const FiniteLattice& L, const std::string& text) {
  ordered_json j = parse(text);
  check_host(L, j);
  const ordered_json& map = field(j, "map");
  if (!map.is_object())
    throw Error(Err::bad_input, "\"map\" must be an object of label pairs");
  std::map<std::string, std::string> table;
  for (const auto& [k, v] : map.items()) {
    if (!v.is_string())
      throw Error(Err::bad_input, "\"map\" values must be labels");
    table[k] = v.get<std::string>();
  }
  // Flags are recomputed, never trusted from the document.
  return make_inflator(L, table);
}

std::string interval_set_to_json(const FiniteLattice& L, const IntervalSet& B,
                                 const std::string& level) {
  ordered_json out;
  out["lattice"] = L.digest();
  out["level"] = level;
  out["intervals"] = interval_pairs(L, B);
  return out.dump(kIndent) + "\n";
}

LeveledIntervalSet interval_set_from_json(const FiniteLattice& L,
                                          const std::string& text) {
  ordered_json j = parse(text);
  check_host(L, j);
  LeveledIntervalSet out{IntervalSet(L), string_field(j, "level")};
  const ordered_json& arr = field(j, "intervals");
  if (!arr.is_array())
    throw Error(Err::bad_input, "\"intervals\" must be an array of pairs");
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
        !p[1].is_string())
      throw Error(Err::bad_input, "\"intervals\" must be an array of pairs");
    out.set.insert(L.index_of(p[0].get<std::string>()),
                   L.index_of(p[1].get<std::string>()));
  }
  return out;
}

std::string report_to_json(const std::string& lattice_digest,
                           const std::vector<CheckResult>& checks) {
  // Document order is the check identifier, not execution order, so the
  // emitted bytes do not depend on how the suite was scheduled.
  std::vector<CheckResult> rows = checks;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.id < b.id;
                   });
  ordered_json out;
  out["lattice"] = lattice_digest;
  ordered_json arr = ordered_json::array();
  for (const CheckResult& c : rows) {
    ordered_json row;
    row["id"] = c.id;
    row["status"] = status_name(c.status);
    row["witness"] = c.witness;
    arr.push_back(std::move(row));
  }
  out["checks"] = std::move(arr);
  return out.dump(kIndent) + "\n";
}

std::string dimension_to_json(const DimensionReport& r) {
  ordered_json out;
  out["lattice"] = r.lattice_digest;
  out["notion"] = r.notion;
  out["verdict"] = r.verdict;
  out["steps"] = r.steps;
  out["trace"] = r.trace;
  return out.dump(kIndent) + "\n";
}

std::string sa_report_to_json(const SAReport& r) {
  ordered_json out;
  out["lattice"] = r.lattice_digest;
  out["notion"] = "strongly_atomic";
  out["verdict"] = r.by_definition;
  out["by_definition"] = r.by_definition;
  out["by_soc_iteration"] = r.by_soc_iteration;
  out["by_totalizer"] = r.by_totalizer;
  out["steps"] = r.steps;
  out["trace"] = r.trace;
  return out.dump(kIndent) + "\n";
}

std::string operator_lattice_to_json(const FiniteLattice& host,
                                     const OperatorLattice& F) {
  if (host.digest() != F.host_digest())
    throw Error(Err::host_mismatch, "family was enumerated on another host");
  ordered_json out;
  out["host"] = F.host_digest();
  out["family"] = family_name(F.family());
  out["size"] = F.size();
  out["members"] = member_tables(host, F.members());
  if (F.has_lattice()) out["as_lattice"] = lattice_json(F.lattice());
  return out.dump(kIndent) + "\n";
}

std::string nucleus_lattice_to_json(const NucleusLattice& NL) {
  ordered_json out;
  out["host"] = NL.host().digest();
  out["size"] = NL.size();
  out["as_lattice"] = lattice_json(NL.order());
  out["members"] = member_tables(NL.host(), NL.family().members());
  return out.dump(kIndent) + "\n";
}

std::string gab_table_to_json(const NucleusLattice& NL) {
  ordered_json out;
  out["lattice"] = NL.host().digest();
  Inflator g = gab_inflator(NL);
  ordered_json table;
  for (int i = 0; i < NL.size(); ++i) table[std::to_string(i)] = g.values[i];
  out["gab"] = std::move(table);
  return out.dump(kIndent) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::bad_input, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::bad_input, "cannot write " + path);
  out << text;
}

}  // namespace idiomlab::io
