// Acceptance gate: twelve criteria, one pass/fail line each. Exits nonzero
// when any criterion fails. Each criterion states its own scope; together
// they pin the closed forms against brute-force routes, the frame and
// dimension machinery against frozen desk-scale values, and the report
// output against byte determinism.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "idiomlab/config.hpp"
#include "idiomlab/dimensions.hpp"
#include "idiomlab/error.hpp"
#include "idiomlab/inflator.hpp"
#include "idiomlab/intervals.hpp"
#include "idiomlab/json_io.hpp"
#include "idiomlab/lattice.hpp"
#include "idiomlab/nuclei.hpp"
#include "idiomlab/operator_lattice.hpp"
#include "idiomlab/verify.hpp"

using namespace idiomlab;

namespace {

std::vector<FiniteLattice> suite_lattices() {
  std::vector<FiniteLattice> out;
  for (int n = 2; n <= 5; ++n) out.push_back(make_chain(n));
  out.push_back(make_boolean(2));
  out.push_back(make_boolean(3));
  out.push_back(make_diamond_m3());
  out.push_back(make_product(make_chain(2), make_chain(3)));
  return out;
}

std::vector<FiniteLattice> small_hosts() {
  std::vector<FiniteLattice> out;
  for (int n = 2; n <= 4; ++n) out.push_back(make_chain(n));
  out.push_back(make_boolean(2));
  out.push_back(make_diamond_m3());
  return out;
}

std::string at(const FiniteLattice& L, const std::string& detail) {
  return L.name() + ": " + detail;
}

// Each criterion returns "" on success, otherwise the reason it failed.

std::string c1_totalizer_oracle() {
  for (const FiniteLattice& L : suite_lattices()) {
    OperatorLattice F = OperatorLattice::enumerate(L, Family::all, 100000);
    for (int i = 0; i < F.size(); ++i) {
      const Inflator& d = F.members()[i];
      Inflator t = totalizer(L, d);
      if (!(t == o_inflator(L, d.values[L.bottom()])))
        return at(L, "closed form differs from the bottom-jump form at member " +
                         std::to_string(i));
      if (!(t == brute_totalizer(L, F, d)))
        return at(L, "closed form differs from the brute meet at member " +
                         std::to_string(i));
    }
  }
  return "";
}

std::string c2_equalizer_oracle() {
  for (const FiniteLattice& L : suite_lattices()) {
    // The criterion scopes itself to hosts whose family fits the cap; every
    // suite host does, so a bound error here is a genuine failure.
    OperatorLattice F = OperatorLattice::enumerate(L, Family::all, 100000);
    for (int i = 0; i < F.size(); ++i) {
      const Inflator& d = F.members()[i];
      if (!(equalizer(L, d) == brute_equalizer(L, F, d)))
        return at(L, "image-fixing form differs from the brute join at member " +
                         std::to_string(i));
    }
  }
  return "";
}

std::string c3_extremal_laws() {
  for (const FiniteLattice& L : small_hosts()) {
    OperatorLattice F = OperatorLattice::enumerate(L, Family::all, 100000);
    const auto& ms = F.members();
    std::vector<Inflator> ts, es;
    for (const Inflator& d : ms) {
      ts.push_back(totalizer(L, d));
      es.push_back(equalizer(L, d));
    }
    if (!(totalizer(L, identity_inflator(L)) == top_inflator(L)))
      return at(L, "the identity's totalizer is not the constant top");
    if (!(totalizer(L, top_inflator(L)) == identity_inflator(L)))
      return at(L, "the constant top's totalizer is not the identity");
    for (size_t i = 0; i < ms.size(); ++i) {
      if (!es[i].flags.idempotent)
        return at(L, "an equalizer is not idempotent");
      if (!pointwise_leq(L, es[i], ms[i]))
        return at(L, "an equalizer is not below its argument");
      if ((es[i] == ms[i]) != ms[i].flags.idempotent)
        return at(L, "equalizer fixes a non-idempotent, or moves an idempotent");
      for (size_t j = 0; j < ms.size(); ++j) {
        if (pointwise_leq(L, ms[i], ms[j]) && !pointwise_leq(L, ts[j], ts[i]))
          return at(L, "totalizer is not antitone");
        Inflator join = pointwise_join(L, {ms[i], ms[j]});
        Inflator meet = pointwise_meet(L, {ms[i], ms[j]});
        if (!pointwise_leq(L, totalizer(L, join),
                           pointwise_meet(L, {ts[i], ts[j]})))
          return at(L, "t(join) exceeds the meet of totalizers");
        if (!pointwise_leq(L, pointwise_join(L, {ts[i], ts[j]}),
                           totalizer(L, meet)))
          return at(L, "t(meet) is below the join of totalizers");
      }
    }
    // Whole-family versions of the join and meet comparisons.
    Inflator all_join = pointwise_join(L, ms), all_meet = pointwise_meet(L, ms);
    Inflator t_join = totalizer(L, all_join), t_meet = totalizer(L, all_meet);
    for (const Inflator& t : ts) {
      if (!pointwise_leq(L, t_join, t))
        return at(L, "t of the family join is not a lower bound");
      if (!pointwise_leq(L, t, t_meet))
        return at(L, "t of the family meet is not an upper bound");
    }
  }
  return "";
}

std::string c4_class_intervals() {
  for (const FiniteLattice& L : {make_chain(3), make_boolean(2)}) {
    OperatorLattice F = OperatorLattice::enumerate(L, Family::all, 100000);
    const auto& ms = F.members();
    std::vector<Inflator> ts;
    std::set<std::vector<Elem>> distinct;
    for (const Inflator& d : ms) {
      ts.push_back(totalizer(L, d));
      distinct.insert(ts.back().values);
    }
    if (static_cast<int>(distinct.size()) != L.size())
      return at(L, "expected exactly one totalizer class per element");
    for (size_t i = 0; i < ms.size(); ++i) {
      TotClassBounds b = tot_class_bounds(L, ms[i]);
      if (!(totalizer(L, b.lower) == ts[i]) || !(totalizer(L, b.upper) == ts[i]))
        return at(L, "class bounds are not class members");
      for (size_t j = 0; j < ms.size(); ++j) {
        bool same_class = ts[j] == ts[i];
        bool inside = pointwise_leq(L, b.lower, ms[j]) &&
                      pointwise_leq(L, ms[j], b.upper);
        if (same_class != inside)
          return at(L, "a totalizer class differs from its pointwise interval");
      }
    }
  }
  return "";
}

std::string c5_nuclei_frame() {
  for (const FiniteLattice& L : suite_lattices()) {
    NucleusLattice nl = NucleusLattice::build(L, 100000);
    if (!nl.order().is_distributive())
      return at(L, "nucleus order is not distributive");
  }
  NucleusLattice c3 = NucleusLattice::build(make_chain(3), 100000);
  if (c3.size() != 4) return "3-chain: expected exactly 4 nuclei";
  if (c3.order().digest() != make_boolean(2).digest())
    return "3-chain: the 4 nuclei do not form the boolean diamond";
  return "";
}

std::string c6_sa_trichotomy() {
  std::vector<FiniteLattice> hosts = suite_lattices();
  for (uint64_t seed = 0; seed < 100; ++seed)
    hosts.push_back(random_modular_lattice(seed, 8));
  for (const FiniteLattice& L : hosts) {
    SAReport r = strongly_atomic(L);
    if (!r.agree()) return at(L, "the three routes disagree");
    if (!r.by_definition) return at(L, "a finite host reported not strongly atomic");
  }
  return "";
}

std::string c7_negation_below_totalizer() {
  // The negation of a stable member is the pseudocomplement of its
  // composition shift d |-> d o s, taken in the enumerated stable self-maps
  // of the full operator lattice and evaluated at the identity. That value
  // must sit below the totalizer. The pseudocomplement taken directly in
  // the first-level family can exceed the totalizer (boolean 2 carries
  // such members); those are counted and reported, not failed.
  std::vector<FiniteLattice> hosts;
  for (int n = 2; n <= 4; ++n) hosts.push_back(make_chain(n));
  hosts.push_back(make_boolean(2));
  int direct_gaps = 0;
  std::string gap_site;
  for (const FiniteLattice& L : hosts) {
    OperatorLattice il = OperatorLattice::enumerate(L, Family::all, 2000000);
    OperatorLattice S = OperatorLattice::enumerate(L, Family::stable, 2000000);
    const FiniteLattice& host2 = il.lattice();
    OperatorLattice sil =
        OperatorLattice::enumerate(host2, Family::stable, 2000000);
    const int id_idx = il.index_of(identity_inflator(L));
    for (const Inflator& s : S.members()) {
      Inflator t = totalizer(L, s);
      auto neg = pseudocomplement(host2, sil, mu_operator(L, il, s));
      if (!neg) return at(L, "a composition shift has no pseudocomplement");
      if (!pointwise_leq(L, il.members()[neg->values[id_idx]], t))
        return at(L, "a shift negation evaluates above the totalizer");
      auto direct = pseudocomplement(L, S, s);
      if (direct && !pointwise_leq(L, *direct, t) && ++direct_gaps == 1)
        gap_site = L.name();
    }
  }
  if (direct_gaps > 0)
    std::printf(
        "       note: %d direct family pseudocomplement(s) exceed the "
        "totalizer (first on %s); the shift negations all stayed below\n",
        direct_gaps, gap_site.c_str());
  return "";
}

std::string c8_second_level() {
  RunConfig cfg;
  for (const FiniteLattice& L : {make_chain(2), make_chain(3)}) {
    for (const CheckResult& c : second_level_suite(L, cfg)) {
      if (c.status == CheckResult::Status::fail)
        return at(L, c.id + " failed: " + c.witness);
      if (c.status == CheckResult::Status::skip)
        return at(L, c.id + " skipped: " + c.witness);
    }
  }
  return "";
}

std::string c9_gab_pipeline() {
  for (const FiniteLattice& L : {make_chain(3), make_boolean(2)}) {
    NucleusLattice nl = NucleusLattice::build(L, 100000);
    DimensionReport r = gab_dimension(nl);
    if (!r.verdict || r.steps != 1)
      return at(L, "gab of the identity should reach the top in one step");
    // Both computation routes are compared inside gab(); a divergence throws.
    for (int i = 0; i < nl.size(); ++i) gab(nl, nl.nucleus(i));
  }
  for (const FiniteLattice& L : suite_lattices()) {
    NucleusLattice nl = NucleusLattice::build(L, 100000);
    const FiniteLattice& P = nl.order();
    int g0 = nl.require(gab(nl, nl.nucleus(nl.bottom_index())).value);
    Inflator gmap = gab_inflator(nl);
    bool jump_low = u_inflator(P, g0) == gmap;
    bool jump_high = gmap == iota_inflator(P, g0);
    SAReport sa = strongly_atomic(L);
    bool all = sa.agree() && sa.by_definition;
    if (all != (jump_low && jump_high))
      return at(L, "strong atomicity does not match the two-jump collapse");
    if (all != jump_high)
      return at(L, "strong atomicity does not match the upper-jump collapse");
  }
  return "";
}

std::string c10_comparison_chains() {
  RunConfig cfg;
  const std::set<std::string> required = {
      "totalizer-chain-soc-gab", "totalizer-chain-cbd",
      "totalizer-chain-cbd-vs-soc", "gab-below-soc"};
  for (const FiniteLattice& L : suite_lattices()) {
    bool boy_skipped = false;
    std::set<std::string> passed;
    for (const CheckResult& c : comparison_chains(L, cfg)) {
      if (c.status == CheckResult::Status::fail)
        return at(L, c.id + " failed: " + c.witness);
      if (c.id == "totalizer-chain-boy")
        boy_skipped = c.status == CheckResult::Status::skip;
      else if (c.status == CheckResult::Status::pass)
        passed.insert(c.id);
    }
    for (const std::string& id : required)
      if (!passed.count(id)) return at(L, id + " did not pass");
    if (!boy_skipped)
      return at(L, "the out-of-scope chain item must be reported as a skip");
  }
  return "";
}

std::string c11_order_predicates() {
  int distribution_gaps = 0;
  std::string gap_site;
  for (const FiniteLattice& L : small_hosts()) {
    OperatorLattice F = OperatorLattice::enumerate(L, Family::all, 100000);
    const auto& ms = F.members();
    for (int i = 0; i < F.size(); ++i) {
      OrderPredicates p = order_predicates(F, L, i);
      if (p.meet_irreducible && !p.meet_prime)
        return at(L, "an irreducible member is not prime");
      if (ms[i].flags.idempotent && p.meet_prime && !p.meet_irreducible)
        return at(L, "an idempotent prime member is not irreducible");
      if (p.meet_prime) {
        Inflator e = equalizer(L, ms[i]);
        if (e == top_inflator(L))
          return at(L, "the equalizer of a prime member is the top");
        if (!order_predicates(F, L, F.require(e)).meet_prime)
          return at(L, "the equalizer of a prime member is not prime");
      }
    }
    // Essentiality inside the stable family: any stable k between e(d) and
    // the closure of d that meets d at e(d) must be e(d) itself.
    for (const Inflator& d : ms) {
      if (!d.flags.stable) continue;
      Inflator e = equalizer(L, d), dinf = infty(L, d).closure;
      for (const Inflator& k : ms) {
        if (!k.flags.stable) continue;
        if (!pointwise_leq(L, e, k) || !pointwise_leq(L, k, dinf)) continue;
        if (pointwise_meet(L, {d, k}) == e && !(k == e))
          return at(L, "a stable member witnesses a failure of essentiality");
      }
      // The meet-closure distribution behind that argument is surveyed, not
      // assumed: count any counterexample and report it below.
      for (const Inflator& k : ms) {
        if (!k.flags.stable) continue;
        Inflator lhs = infty(L, pointwise_meet(L, {d, k})).closure;
        Inflator rhs =
            pointwise_meet(L, {infty(L, d).closure, infty(L, k).closure});
        if (!(lhs == rhs) && ++distribution_gaps == 1)
          gap_site = L.name();
      }
    }
  }
  if (distribution_gaps > 0)
    std::printf(
        "       note: closure does not distribute over %d stable meet(s) "
        "(first on %s); essentiality itself held everywhere\n",
        distribution_gaps, gap_site.c_str());
  return "";
}

std::string c12_determinism() {
  FiniteLattice L = make_chain(3);
  RunConfig cfg;
  std::string a = io::report_to_json(L.digest(), full_suite(L, cfg));
  std::string b = io::report_to_json(L.digest(), full_suite(L, cfg));
  if (a != b) return "two identical runs produced different report bytes";
  if (a.empty() || a.back() != '\n') return "report must end with a newline";
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {"totalizer-oracle", c1_totalizer_oracle},
      {"equalizer-oracle", c2_equalizer_oracle},
      {"extremal-operator-laws", c3_extremal_laws},
      {"totalizer-class-intervals", c4_class_intervals},
      {"nuclei-frame", c5_nuclei_frame},
      {"strongly-atomic-trichotomy", c6_sa_trichotomy},
      {"stable-negation-below-totalizer", c7_negation_below_totalizer},
      {"second-level-suite", c8_second_level},
      {"gab-pipeline", c9_gab_pipeline},
      {"comparison-chains", c10_comparison_chains},
      {"order-predicates", c11_order_predicates},
      {"verify-determinism", c12_determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = criteria[i].run();
    } catch (const Error& e) {
      reason = std::string(err_name(e.kind)) + ": " + e.what();
    } catch (const std::exception& e) {
      reason = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (reason.empty()) {
      std::printf("[PASS] %2zu %-32s (%.1fs)\n", i + 1, criteria[i].name,
                  secs);
    } else {
      std::printf("[FAIL] %2zu %-32s (%.1fs) %s\n", i + 1, criteria[i].name,
                  secs, reason.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of 12 criteria failed\n", failures);
  return failures ? 1 : 0;
}
