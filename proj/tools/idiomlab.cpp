// Command-line surface over the idiomlab library.
//
// Exit codes: 0 success, 1 verification failure (a suite check failed or an
// oracle disagreed), 2 usage or input error, 3 a configured bound was
// crossed (the error message names the bound).

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idiomlab/cache.hpp"
#include "idiomlab/config.hpp"
#include "idiomlab/dimensions.hpp"
#include "idiomlab/error.hpp"
#include "idiomlab/inflator.hpp"
#include "idiomlab/intervals.hpp"
#include "idiomlab/json_io.hpp"
#include "idiomlab/lattice.hpp"
#include "idiomlab/nuclei.hpp"
#include "idiomlab/operator_lattice.hpp"
#include "idiomlab/report.hpp"
#include "idiomlab/verify.hpp"

namespace {

using idiomlab::CheckResult;
using idiomlab::Err;
using idiomlab::Error;
using idiomlab::FiniteLattice;
using idiomlab::Inflator;
using idiomlab::OperatorLattice;
using idiomlab::RunConfig;
using ordered_json = nlohmann::ordered_json;

int exit_code_for(const Error& e) {
  if (idiomlab::is_bound_error(e.kind)) return 3;
  switch (e.kind) {
    case Err::route_disagreement:
    case Err::condition_lost_at_join:
    case Err::frame_violation:
      return 1;  // an internal cross-check caught a real disagreement
    default:
      return 2;
  }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

FiniteLattice load_lattice(const RunConfig& cfg, const std::string& path) {
  return idiomlab::io::lattice_from_json(idiomlab::io::read_file(path),
                                         cfg.max_lattice_size);
}

// Compute-or-reuse wrapper for the JSON payload of a cacheable operation.
std::string cached_payload(const RunConfig& cfg, const FiniteLattice& L,
                           const std::string& operation,
                           const std::function<std::string()>& make) {
  idiomlab::Cache cache(cfg.cache_dir);
  if (cache.enabled()) {
    if (auto hit = cache.get(L, operation, cfg)) return *hit;
  }
  std::string payload = make();
  if (cache.enabled()) cache.put(L, operation, cfg, payload);
  return payload;
}

std::string triple_text(const FiniteLattice& L, const idiomlab::Triple& t) {
  return "(" + L.label(t.a) + ", " + L.label(t.b) + ", " + L.label(t.c) + ")";
}

std::string flags_text(const Inflator& d) {
  if (d.flags.nucleus) return "nucleus";
  std::string s;
  if (d.flags.prenucleus)
    s = "prenucleus";
  else if (d.flags.stable)
    s = "stable";
  if (d.flags.idempotent) s += s.empty() ? "idempotent" : " idempotent";
  return s.empty() ? "inflator" : s;
}

std::string map_text(const FiniteLattice& L, const Inflator& d) {
  std::string s = "{";
  for (idiomlab::Elem a = 0; a < L.size(); ++a) {
    if (a) s += ", ";
    s += L.label(a) + "->" + L.label(d.values[a]);
  }
  return s + "}";
}

void print_map_block(const FiniteLattice& L, const Inflator& d) {
  for (idiomlab::Elem a = 0; a < L.size(); ++a)
    std::printf("  %s -> %s\n", L.label(a).c_str(),
                L.label(d.values[a]).c_str());
  std::printf("  class: %s\n", flags_text(d).c_str());
}

std::string trace_text(const std::vector<std::string>& labels) {
  std::string s;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += " -> ";
    s += labels[i];
  }
  return s;
}

std::vector<std::string> label_trace(const FiniteLattice& L,
                                     const std::vector<idiomlab::Elem>& t) {
  std::vector<std::string> out;
  out.reserve(t.size());
  for (idiomlab::Elem e : t) out.push_back(L.label(e));
  return out;
}

// --- subcommand bodies -------------------------------------------------------

int run_gen(const RunConfig& cfg, const std::string& family,
            const std::vector<std::string>& params, const std::string& out) {
  FiniteLattice L = [&] {
    if (family.find('(') != std::string::npos) {
      if (!params.empty())
        throw Error(Err::bad_input,
                    "an expression-form family takes no extra parameters");
      return idiomlab::generate_family(family, cfg.max_lattice_size);
    }
    if (family == "random") {
      if (params.empty())
        throw Error(Err::bad_input, "usage: gen random SEED [MAX_SIZE]");
      uint64_t seed = std::stoull(params[0]);
      int max_size = params.size() > 1 ? std::stoi(params[1]) : 8;
      return idiomlab::random_modular_lattice(seed, max_size);
    }
    std::string expr = family;
    if (!params.empty()) {
      expr += "(";
      for (size_t i = 0; i < params.size(); ++i) {
        if (i) expr += ",";
        expr += params[i];
      }
      expr += ")";
    }
    return idiomlab::generate_family(expr, cfg.max_lattice_size);
  }();
  idiomlab::io::write_file(out, idiomlab::io::lattice_to_json(L));
  if (cfg.format == RunConfig::Format::json) {
    ordered_json j;
    j["file"] = out;
    j["name"] = L.name();
    j["size"] = L.size();
    j["digest"] = L.digest();
    std::fputs(dump(j).c_str(), stdout);
  } else {
    std::printf("wrote %s: %s, %d elements, digest %s\n", out.c_str(),
                L.name().c_str(), L.size(), L.digest().c_str());
  }
  return 0;
}

int run_check(const RunConfig& cfg, const std::string& file) {
  FiniteLattice L = load_lattice(cfg, file);
  if (cfg.format == RunConfig::Format::json) {
    ordered_json j;
    j["name"] = L.name();
    j["size"] = L.size();
    j["digest"] = L.digest();
    j["bottom"] = L.label(L.bottom());
    j["top"] = L.label(L.top());
    j["modular"] = L.is_modular();
    if (L.modular_witness()) {
      const auto& w = *L.modular_witness();
      j["modular_witness"] = {L.label(w.a), L.label(w.b), L.label(w.c)};
    } else {
      j["modular_witness"] = nullptr;
    }
    j["distributive"] = L.is_distributive();
    if (L.distributive_witness()) {
      const auto& w = *L.distributive_witness();
      j["distributive_witness"] = {L.label(w.a), L.label(w.b), L.label(w.c)};
    } else {
      j["distributive_witness"] = nullptr;
    }
    std::fputs(dump(j).c_str(), stdout);
    return 0;
  }
  std::printf("name: %s\n", L.name().c_str());
  std::printf("elements: %d (bottom %s, top %s)\n", L.size(),
              L.label(L.bottom()).c_str(), L.label(L.top()).c_str());
  std::printf("digest: %s\n", L.digest().c_str());
  if (L.is_modular())
    std::printf("modular: yes\n");
  else
    std::printf("modular: no  witness %s\n",
                triple_text(L, *L.modular_witness()).c_str());
  if (L.is_distributive())
    std::printf("distributive: yes\n");
  else
    std::printf("distributive: no  witness %s\n",
                triple_text(L, *L.distributive_witness()).c_str());
  return 0;
}

int run_inflators(const RunConfig& cfg, const std::string& file,
                  const std::string& family_name) {
  FiniteLattice L = load_lattice(cfg, file);
  auto fam = idiomlab::family_from_name(family_name);
  if (!fam)
    throw Error(Err::bad_parameter, "unknown family \"" + family_name + "\"");
  if (cfg.format == RunConfig::Format::json) {
    std::string payload =
        cached_payload(cfg, L, "inflators-" + family_name, [&] {
          OperatorLattice F =
              OperatorLattice::enumerate(L, *fam, cfg.max_enumeration);
          return idiomlab::io::operator_lattice_to_json(L, F);
        });
    std::fputs(payload.c_str(), stdout);
    return 0;
  }
  OperatorLattice F = OperatorLattice::enumerate(L, *fam, cfg.max_enumeration);
  int stable = 0, prenucleus = 0, idempotent = 0, nucleus = 0;
  for (const Inflator& d : F.members()) {
    stable += d.flags.stable;
    prenucleus += d.flags.prenucleus;
    idempotent += d.flags.idempotent;
    nucleus += d.flags.nucleus;
  }
  std::printf("%s family on %s: %d members\n", idiomlab::family_name(*fam),
              L.name().c_str(), F.size());
  std::printf("stable %d, prenucleus %d, idempotent %d, nucleus %d\n", stable,
              prenucleus, idempotent, nucleus);
  for (int i = 0; i < F.size(); ++i)
    std::printf("#%d: %s  [%s]\n", i, map_text(L, F.members()[i]).c_str(),
                flags_text(F.members()[i]).c_str());
  return 0;
}

int run_extremal(const RunConfig& cfg, const std::string& file,
                 const std::string& inf_file, bool oracle, bool totalizer) {
  FiniteLattice L = load_lattice(cfg, file);
  Inflator d =
      idiomlab::io::inflator_from_json(L, idiomlab::io::read_file(inf_file));
  Inflator r =
      totalizer ? idiomlab::totalizer(L, d) : idiomlab::equalizer(L, d);
  bool agree = true;
  if (oracle) {
    OperatorLattice all =
        OperatorLattice::enumerate(L, idiomlab::Family::all,
                                   cfg.max_enumeration);
    Inflator brute = totalizer ? idiomlab::brute_totalizer(L, all, d)
                               : idiomlab::brute_equalizer(L, all, d);
    agree = brute == r;
    if (!agree)
      std::fprintf(stderr, "oracle disagrees: closed form %s, brute %s\n",
                   map_text(L, r).c_str(), map_text(L, brute).c_str());
  }
  if (cfg.format == RunConfig::Format::json) {
    std::fputs(idiomlab::io::inflator_to_json(L, r).c_str(), stdout);
  } else {
    std::printf("%s of %s:\n", totalizer ? "totalizer" : "equalizer",
                map_text(L, d).c_str());
    print_map_block(L, r);
    if (oracle) std::printf("oracle: %s\n", agree ? "agree" : "DISAGREE");
  }
  return agree ? 0 : 1;
}

int run_derive(const RunConfig& cfg, const std::string& file,
               const std::string& op, bool closure) {
  FiniteLattice L = load_lattice(cfg, file);
  Inflator d = op == "soc" ? idiomlab::soc(L) : idiomlab::cbd(L);
  if (cfg.format == RunConfig::Format::json) {
    ordered_json j;
    j["lattice"] = L.digest();
    j["op"] = op;
    j["derivative"] = ordered_json::parse(idiomlab::io::inflator_to_json(L, d));
    if (closure) {
      idiomlab::ClosurePower cp = idiomlab::infty(L, d);
      idiomlab::DimensionReport r = idiomlab::d_length(L, d);
      j["closure"] =
          ordered_json::parse(idiomlab::io::inflator_to_json(L, cp.closure));
      j["closure_steps"] = cp.steps;
      j["length"] = ordered_json::parse(idiomlab::io::dimension_to_json(r));
    }
    std::fputs(dump(j).c_str(), stdout);
    return 0;
  }
  std::printf("%s on %s:\n", op.c_str(), L.name().c_str());
  print_map_block(L, d);
  if (closure) {
    idiomlab::ClosurePower cp = idiomlab::infty(L, d);
    idiomlab::DimensionReport r = idiomlab::d_length(L, d);
    std::printf("closure (power %d):\n", cp.steps);
    print_map_block(L, cp.closure);
    std::printf("length trace: %s (%d steps, reaches top: %s)\n",
                trace_text(label_trace(L, r.trace)).c_str(), r.steps,
                r.verdict ? "yes" : "no");
  }
  return 0;
}

int run_nuclei(const RunConfig& cfg, const std::string& file) {
  FiniteLattice L = load_lattice(cfg, file);
  if (cfg.format == RunConfig::Format::json) {
    std::string payload = cached_payload(cfg, L, "nuclei", [&] {
      idiomlab::NucleusLattice NL =
          idiomlab::NucleusLattice::build(L, cfg.max_enumeration);
      return idiomlab::io::nucleus_lattice_to_json(NL);
    });
    std::fputs(payload.c_str(), stdout);
    return 0;
  }
  idiomlab::NucleusLattice NL =
      idiomlab::NucleusLattice::build(L, cfg.max_enumeration);
  std::printf("nuclei of %s: %d members, order %s\n", L.name().c_str(),
              NL.size(),
              NL.order().is_distributive() ? "distributive" : "NOT distributive");
  for (int i = 0; i < NL.size(); ++i)
    std::printf("#%d: %s\n", i, map_text(L, NL.nucleus(i)).c_str());
  return 0;
}

int run_gab(const RunConfig& cfg, const std::string& file) {
  FiniteLattice L = load_lattice(cfg, file);
  if (cfg.format == RunConfig::Format::json) {
    std::string payload = cached_payload(cfg, L, "gab", [&] {
      idiomlab::NucleusLattice NL =
          idiomlab::NucleusLattice::build(L, cfg.max_enumeration);
      return idiomlab::io::gab_table_to_json(NL);
    });
    std::fputs(payload.c_str(), stdout);
    return 0;
  }
  idiomlab::NucleusLattice NL =
      idiomlab::NucleusLattice::build(L, cfg.max_enumeration);
  Inflator g = idiomlab::gab_inflator(NL);
  std::printf("gab on the %d nuclei of %s:\n", NL.size(), L.name().c_str());
  for (int i = 0; i < NL.size(); ++i)
    std::printf("  #%d %s -> #%d\n", i, map_text(L, NL.nucleus(i)).c_str(),
                g.values[i]);
  idiomlab::DimensionReport r = idiomlab::gab_dimension(NL);
  std::printf("gab dimension: %d steps from the identity, reaches top: %s\n",
              r.steps, r.verdict ? "yes" : "no");
  return 0;
}

int run_sa(const RunConfig& cfg, const std::string& file) {
  FiniteLattice L = load_lattice(cfg, file);
  idiomlab::SAReport r = idiomlab::strongly_atomic(L);
  if (cfg.format == RunConfig::Format::json) {
    std::fputs(idiomlab::io::sa_report_to_json(r).c_str(), stdout);
  } else {
    std::printf("strongly atomic (%s):\n", L.name().c_str());
    std::printf("  by definition scan: %s\n", r.by_definition ? "yes" : "no");
    std::printf("  by soc iteration:   %s\n",
                r.by_soc_iteration ? "yes" : "no");
    std::printf("  by totalizer:       %s\n", r.by_totalizer ? "yes" : "no");
    std::printf("  routes agree: %s\n", r.agree() ? "yes" : "NO");
    std::printf("  soc trace: %s (%d steps)\n",
                trace_text(label_trace(L, r.trace)).c_str(), r.steps);
  }
  return r.agree() ? 0 : 1;
}

int run_verify(const RunConfig& cfg, bool format_given, const std::string& file,
               const std::string& suite, const std::string& out) {
  FiniteLattice L = load_lattice(cfg, file);
  // The report JSON is the contract output of verify, so it is the default
  // here even though the tool-wide default format is text.
  bool as_json = format_given ? cfg.format == RunConfig::Format::json : true;
  std::string payload = cached_payload(cfg, L, "verify-" + suite, [&] {
    std::vector<CheckResult> checks;
    if (suite == "core")
      checks = idiomlab::core_suite(L, cfg);
    else if (suite == "second-level")
      checks = idiomlab::second_level_suite(L, cfg);
    else
      checks = idiomlab::full_suite(L, cfg);
    return idiomlab::io::report_to_json(L.digest(), checks);
  });
  if (!out.empty()) idiomlab::io::write_file(out, payload);
  int pass = 0, fail = 0, skip = 0;
  ordered_json doc = ordered_json::parse(payload);
  for (const auto& row : doc["checks"]) {
    const std::string status = row["status"];
    if (status == "pass") ++pass;
    if (status == "fail") ++fail;
    if (status == "skip") ++skip;
  }
  if (as_json) {
    std::fputs(payload.c_str(), stdout);
  } else {
    for (const auto& row : doc["checks"]) {
      const std::string status = row["status"];
      const std::string id = row["id"];
      std::printf("%-4s %s\n", status.c_str(), id.c_str());
      if (status != "pass") {
        const std::string witness = row["witness"];
        std::printf("     %s\n", witness.c_str());
      }
    }
    std::printf("%d pass, %d fail, %d skip\n", pass, fail, skip);
  }
  return fail > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-lattice inflator calculus workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg = RunConfig::from_env();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "result cache directory (also via IDIOMLAB_CACHE_DIR)");
  app.add_option("--seed", cfg.seed, "seed for randomized witness hunts")
      ->capture_default_str();
  app.add_option("--max-lattice-size", cfg.max_lattice_size,
                 "largest accepted lattice")
      ->capture_default_str();
  app.add_option("--max-enumeration", cfg.max_enumeration,
                 "largest enumerated operator family")
      ->capture_default_str();
  app.add_option("--second-level-bound", cfg.second_level_bound,
                 "largest host for operator-on-operator work")
      ->capture_default_str();

  std::string gen_family, gen_out;
  std::vector<std::string> gen_params;
  auto* gen = app.add_subcommand("gen", "generate a lattice and write JSON");
  gen->add_option("family", gen_family,
                  "chain N | boolean N | diamond_m3 | pentagon_n5 | random "
                  "SEED [MAX] | full expression like product(chain(2),chain(3))")
      ->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("-o,--output", gen_out, "output file")->required();

  std::string check_file;
  auto* check = app.add_subcommand("check", "validate a lattice file");
  check->add_option("file", check_file)->required();

  std::string infl_file, infl_family = "all";
  auto* infl = app.add_subcommand("inflators", "enumerate an operator family");
  infl->add_option("file", infl_file)->required();
  infl->add_option("--family", infl_family)
      ->check(CLI::IsMember({"all", "stable", "prenucleus", "idempotent",
                             "nucleus", "totalizer"}))
      ->capture_default_str();

  std::string tot_file, tot_inf;
  bool tot_oracle = false;
  auto* tot = app.add_subcommand("totalizer", "least map sending d to top");
  tot->add_option("file", tot_file)->required();
  tot->add_option("--inflator", tot_inf, "inflator JSON file")->required();
  tot->add_flag("--oracle", tot_oracle, "compare with the brute-force route");

  std::string eq_file, eq_inf;
  bool eq_oracle = false;
  auto* eq = app.add_subcommand("equalizer", "largest map fixing d's image");
  eq->add_option("file", eq_file)->required();
  eq->add_option("--inflator", eq_inf, "inflator JSON file")->required();
  eq->add_flag("--oracle", eq_oracle, "compare with the brute-force route");

  std::string der_file, der_op;
  bool der_closure = false;
  auto* der = app.add_subcommand("derive", "socle or Cantor-Bendixson map");
  der->add_option("file", der_file)->required();
  der->add_option("--op", der_op)->check(CLI::IsMember({"soc", "cbd"}))
      ->required();
  der->add_flag("--closure", der_closure, "also iterate to the closure");

  std::string nuc_file;
  auto* nuc = app.add_subcommand("nuclei", "enumerate the nucleus lattice");
  nuc->add_option("file", nuc_file)->required();

  std::string gab_file;
  auto* gabc = app.add_subcommand("gab", "gab table on the nucleus lattice");
  gabc->add_option("file", gab_file)->required();

  std::string sa_file;
  auto* sac = app.add_subcommand("sa", "strongly-atomic report");
  sac->add_option("file", sa_file)->required();

  std::string ver_file, ver_suite = "all", ver_out;
  auto* ver = app.add_subcommand("verify", "run the theorem suite");
  ver->add_option("file", ver_file)->required();
  ver->add_option("--suite", ver_suite)
      ->check(CLI::IsMember({"core", "second-level", "all"}))
      ->capture_default_str();
  ver->add_option("-o,--output", ver_out, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help or version
    app.exit(e);
    return 2;
  }

  try {
    // A low --max-enumeration implies the second-level cap unless the user
    // pinned that bound explicitly.
    if (!app.count("--second-level-bound") &&
        cfg.second_level_bound > cfg.max_enumeration)
      cfg.second_level_bound = static_cast<int>(cfg.max_enumeration);
    cfg.validate();
    cfg.format = format == "json" ? RunConfig::Format::json
                                  : RunConfig::Format::text;
    if (gen->parsed()) return run_gen(cfg, gen_family, gen_params, gen_out);
    if (check->parsed()) return run_check(cfg, check_file);
    if (infl->parsed()) return run_inflators(cfg, infl_file, infl_family);
    if (tot->parsed())
      return run_extremal(cfg, tot_file, tot_inf, tot_oracle, true);
    if (eq->parsed())
      return run_extremal(cfg, eq_file, eq_inf, eq_oracle, false);
    if (der->parsed()) return run_derive(cfg, der_file, der_op, der_closure);
    if (nuc->parsed()) return run_nuclei(cfg, nuc_file);
    if (gabc->parsed()) return run_gab(cfg, gab_file);
    if (sac->parsed()) return run_sa(cfg, sa_file);
    if (ver->parsed())
      return run_verify(cfg, app.count("--format") > 0, ver_file, ver_suite,
                        ver_out);
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", idiomlab::err_name(e.kind),
                 e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
