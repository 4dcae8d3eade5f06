#include "idiomlab/dimensions.hpp"

#include <algorithm>

#include "idiomlab/error.hpp"
#include "idiomlab/intervals.hpp"

namespace idiomlab {

namespace {

struct Orbit {
  std::vector<Elem> trace;
  int steps = 0;
  Elem fix = 0;
};

std::string s_label(const FiniteLattice& L, const Inflator& d) {
  std::string s = "[";
  for (Elem a = 0; a < L.size(); ++a) {
    if (a) s += ",";
    s += L.label(d.values[a]);
  }
  return s + "]";
}

Orbit iterate_from(const std::vector<Elem>& table, Elem start, int limit) {
  Orbit o;
  o.trace.push_back(start);
  Elem cur = start;
  while (table[cur] != cur) {
    cur = table[cur];
    o.trace.push_back(cur);
    if (static_cast<int>(o.trace.size()) > limit + 1)
      throw Error(Err::bad_input, "orbit failed to stabilize");
  }
  o.steps = static_cast<int>(o.trace.size()) - 1;
  o.fix = cur;
  return o;
}

}  // namespace

DimensionReport d_length(const FiniteLattice& L, const Inflator& d) {
  require_host(L, d);
  Orbit orbit = iterate_from(d.values, L.bottom(), L.size());

  DimensionReport r;
  r.lattice_digest = L.digest();
  r.notion = "d-length";
  r.verdict = (orbit.fix == L.top());
  r.steps = orbit.steps;
  r.trace = std::move(orbit.trace);

  bool by_totalizer =
      totalizer(L, infty(L, d).closure) == identity_inflator(L);
  if (by_totalizer != r.verdict)
    throw Error(Err::route_disagreement,
                "orbit verdict disagrees with the totalizer form");
  return r;
}

DimensionReport st_dimension(const NucleusLattice& NL, const Inflator& St,
                             const Inflator& j) {
  const FiniteLattice& P = NL.order();
  require_host(P, St);
  Orbit orbit = iterate_from(St.values, NL.require(j), P.size());

  DimensionReport r;
  r.lattice_digest = P.digest();
  r.notion = "st-dimension";
  r.verdict = (orbit.fix == P.top());
  r.steps = orbit.steps;
  r.trace = std::move(orbit.trace);
  return r;
}

DimensionReport gab_dimension(const NucleusLattice& NL) {
  DimensionReport r = st_dimension(NL, gab_inflator(NL),
                                   NL.nucleus(NL.bottom_index()));
  r.notion = "gab-dimension";
  return r;
}

SAReport strongly_atomic(const FiniteLattice& L) {
  SAReport r;
  r.lattice_digest = L.digest();
  r.by_definition = (sa_set(L).size() == all_intervals(L).size());

  Inflator s = soc(L);
  Orbit orbit = iterate_from(s.values, L.bottom(), L.size());
  r.by_soc_iteration = (orbit.fix == L.top());
  r.steps = orbit.steps;
  r.trace = std::move(orbit.trace);

  r.by_totalizer =
      totalizer(L, infty(L, s).closure) == identity_inflator(L);
  return r;
}

Inflator mu_operator(const FiniteLattice& host, const OperatorLattice& F,
                     const Inflator& k) {
  F.require(k);
  const FiniteLattice& P = F.lattice();
  std::vector<Elem> values(F.size());
  for (int i = 0; i < F.size(); ++i) {
    int idx = F.index_of(compose(host, F.members()[i], k));
    if (idx < 0)
      throw Error(Err::not_closed_under_composition,
                  "composing " + P.label(i) + " with the given member leaves "
                      "the family");
    values[i] = idx;
  }
  return make_inflator(P, std::move(values));
}

Inflator partial_totalizer(const FiniteLattice& host, const OperatorLattice& F,
                           const Inflator& s) {
  require_host(host, s);
  const Inflator top = top_inflator(host);
  std::vector<Elem> acc;
  bool any = false;
  for (const auto& z : F.members()) {
    if (!(compose(host, z, s) == top)) continue;
    if (!any) {
      acc = z.values;
      any = true;
    } else {
      for (Elem a = 0; a < host.size(); ++a)
        acc[a] = host.meet(acc[a], z.values[a]);
    }
  }
  if (!any)
    throw Error(Err::empty_family, "no member totalizes the target");
  int idx = F.index_of(acc);
  if (idx < 0)
    throw Error(Err::member_missing,
                "meet of the totalizing members left the family");
  return F.members()[idx];
}

std::optional<Inflator> pseudocomplement(const FiniteLattice& host,
                                         const OperatorLattice& F,
                                         const Inflator& x) {
  F.require(x);
  // Family meets are pointwise, so the qualifying set has a maximum exactly
  // when the pointwise join of its members is itself a qualifying member.
  // Working on value tables directly keeps families past the lattice cap
  // usable.
  const std::vector<Elem>& bottom = F.members().front().values;
  const int n = host.size();
  auto meets_at_bottom = [&](const std::vector<Elem>& y) {
    for (Elem a = 0; a < n; ++a)
      if (host.meet(y[a], x.values[a]) != bottom[a]) return false;
    return true;
  };
  std::vector<Elem> acc = bottom;
  for (const auto& y : F.members())
    if (meets_at_bottom(y.values))
      for (Elem a = 0; a < n; ++a) acc[a] = host.join(acc[a], y.values[a]);
  if (F.index_of(acc) < 0 || !meets_at_bottom(acc)) return std::nullopt;
  return F.members()[F.index_of(acc)];
}

namespace {

using Status = CheckResult::Status;

template <typename Fn>
void guarded(std::vector<CheckResult>& out, const std::string& id, Fn&& fn) {
  CheckResult r;
  r.id = id;
  try {
    fn(r);
  } catch (const Error& e) {
    r.status = is_bound_error(e.kind) ? Status::skip : Status::fail;
    r.witness = std::string(err_name(e.kind)) + ": " + e.what();
  }
  out.push_back(r);
}

void set_fail(CheckResult& r, const std::string& witness) {
  r.status = Status::fail;
  if (r.witness.empty()) r.witness = witness;
}

std::string flag_text(const FiniteLattice& L) {
  std::string s = L.is_modular() ? "modular" : "not modular";
  s += L.is_distributive() ? ", distributive" : ", not distributive";
  return s;
}

bool lattice_is_boolean(const FiniteLattice& P) {
  return P.is_distributive() &&
         classify(P, {P.bottom(), P.top()}).complemented;
}

}  // namespace

std::vector<CheckResult> second_level_suite(const FiniteLattice& L,
                                            const RunConfig& cfg) {
  std::vector<CheckResult> out;

  // Shared first-level structures; a bound failure here voids the battery.
  std::optional<OperatorLattice> il, sl;
  std::optional<NucleusLattice> nl;
  guarded(out, "operator-hosts-recorded", [&](CheckResult& r) {
    il = OperatorLattice::enumerate(L, Family::all, cfg.max_enumeration);
    sl = OperatorLattice::enumerate(L, Family::stable, cfg.max_enumeration);
    nl = NucleusLattice::build(L, cfg.max_enumeration);
    r.witness = "|all|=" + std::to_string(il->size()) +
                " |stable|=" + std::to_string(sl->size()) +
                " |nuclei|=" + std::to_string(nl->size()) + "; all maps: " +
                flag_text(il->lattice());
  });
  if (!il || !sl || !nl) {
    for (const char* id :
         {"stable-negation-below-totalizer", "stable-negation-below-partial",
          "nucleus-negation-below-partial", "partial-totalizer-chain",
          "stable-negation-partial-equivalence", "stable-boolean-criterion",
          "mu-map-prenucleus", "negation-below-shifted-totalizer",
          "negation-family-agreement", "negation-equality-forces-idempotent",
          "mu-hat-below-st-closure", "closure-shift-equivalence"}) {
      CheckResult r;
      r.id = id;
      r.status = Status::skip;
      r.witness = "first-level enumeration exceeded a bound";
      out.push_back(r);
    }
    return out;
  }

  const Inflator ident = identity_inflator(L);

  // Stable self-maps of the member order, built once and shared by the
  // negation checks below.
  std::optional<OperatorLattice> sil;
  auto second_host = [&]() -> const FiniteLattice& {
    if (il->size() > cfg.second_level_bound)
      throw Error(Err::size_bound, "operator host exceeds the second-level "
                                   "bound");
    const FiniteLattice& host2 = il->lattice();
    if (!sil)
      sil = OperatorLattice::enumerate(host2, Family::stable,
                                       cfg.max_enumeration);
    return host2;
  };

  guarded(out, "stable-negation-below-totalizer", [&](CheckResult& r) {
    // The negation of a stable member, taken as the pseudocomplement of its
    // composition shift and evaluated at the identity, sits below the
    // totalizer. The family pseudocomplement taken directly need not: the
    // witness counts those members instead of failing on them.
    const FiniteLattice& host2 = second_host();
    const int id_idx = il->index_of(ident);
    int direct_gaps = 0, skipped = 0;
    for (const auto& s : sl->members()) {
      Inflator mu_s = mu_operator(L, *il, s);
      auto neg = pseudocomplement(host2, *sil, mu_s);
      if (!neg) {
        ++skipped;
        continue;
      }
      const Inflator& value = il->members()[neg->values[id_idx]];
      if (!pointwise_leq(L, value, totalizer(L, s)))
        set_fail(r, "negation of the shift by " + s_label(L, s) +
                        " evaluates above the totalizer");
      auto direct = pseudocomplement(L, *sl, s);
      if (direct && !pointwise_leq(L, *direct, totalizer(L, s)))
        ++direct_gaps;
    }
    if (r.status == Status::pass) {
      if (skipped)
        r.witness = std::to_string(skipped) +
                    " shifts lacked a pseudocomplement";
      if (direct_gaps) {
        if (!r.witness.empty()) r.witness += "; ";
        r.witness += std::to_string(direct_gaps) +
                     " members carry a direct family pseudocomplement above "
                     "the totalizer";
      }
    }
  });

  guarded(out, "stable-negation-below-partial", [&](CheckResult& r) {
    for (const auto& s : sl->members()) {
      auto neg = pseudocomplement(L, *sl, s);
      if (!neg) continue;
      Inflator jpart =
          partial_totalizer(L, nl->family(), infty(L, s).closure);
      if (!pointwise_leq(L, *neg, jpart))
        set_fail(r, "negation of " + s_label(L, s) +
                        " exceeds the nucleus partial totalizer");
    }
  });

  guarded(out, "nucleus-negation-below-partial", [&](CheckResult& r) {
    for (const auto& j : nl->family().members()) {
      auto neg = pseudocomplement(L, nl->family(), j);
      if (!neg) {
        set_fail(r, "nucleus order lost a pseudocomplement, not a frame?");
        continue;
      }
      if (!pointwise_leq(L, *neg, partial_totalizer(L, nl->family(), j)))
        set_fail(r, "negation of a nucleus exceeds its partial totalizer");
    }
  });

  guarded(out, "partial-totalizer-chain", [&](CheckResult& r) {
    for (const auto& s : sl->members()) {
      Inflator closure = infty(L, s).closure;
      Inflator t_closure = totalizer(L, closure);
      Inflator t_s = totalizer(L, s);
      Inflator frak = partial_totalizer(L, *sl, s);
      Inflator frak_closed = infty(L, frak).closure;
      if (!pointwise_leq(L, t_closure, t_s) ||
          !pointwise_leq(L, t_s, frak) ||
          !pointwise_leq(L, frak, frak_closed)) {
        set_fail(r, "totalizer chain breaks at " + s_label(L, s));
        continue;
      }
      Inflator frak_of_closure = partial_totalizer(L, *sl, closure);
      Inflator lhs = infty(L, frak_of_closure).closure;
      Inflator rhs = partial_totalizer(L, nl->family(), closure);
      if (!(lhs == rhs))
        set_fail(r, "closed stable partial totalizer of " + s_label(L, s) +
                        " misses the nucleus one");
    }
  });

  guarded(out, "stable-negation-partial-equivalence", [&](CheckResult& r) {
    int skipped = 0;
    for (const auto& s : sl->members()) {
      Inflator frak = partial_totalizer(L, *sl, s);
      auto neg_s = pseudocomplement(L, *sl, s);
      auto neg_frak = pseudocomplement(L, *sl, frak);
      if (!neg_s || !neg_frak) {
        ++skipped;
        continue;
      }
      bool eq = (*neg_s == frak);
      bool below = pointwise_leq(L, s, *neg_frak);
      if (eq != below)
        set_fail(r, "equivalence fails at " + s_label(L, s));
    }
    if (r.status == Status::pass && skipped)
      r.witness = std::to_string(skipped) + " members lacked pseudocomplements";
  });

  guarded(out, "stable-boolean-criterion", [&](CheckResult& r) {
    // Universal negation==totalizer forces a boolean stable order; a boolean
    // stable order only bounds the totalizer by the negation, not equality.
    bool all_eq = true, totalizer_bounded = true;
    for (const auto& s : sl->members()) {
      auto neg = pseudocomplement(L, *sl, s);
      Inflator t = totalizer(L, s);
      if (!neg) {
        all_eq = false;
        totalizer_bounded = false;
        continue;
      }
      if (!(*neg == t)) all_eq = false;
      if (!pointwise_leq(L, t, *neg)) totalizer_bounded = false;
    }
    bool boolean = lattice_is_boolean(sl->lattice());
    if (all_eq && !boolean)
      set_fail(r, "negation equals the totalizer throughout, yet the stable "
                  "order is not boolean");
    else if (boolean && !totalizer_bounded)
      set_fail(r, "the stable order is boolean, yet a totalizer escapes its "
                  "negation");
    else
      r.witness = boolean ? "stable order is boolean"
                          : "stable order is not boolean";
  });

  guarded(out, "mu-map-prenucleus", [&](CheckResult& r) {
    for (const auto& k : il->members()) {
      Inflator mu = mu_operator(L, *il, k);
      if (!mu.flags.prenucleus)
        set_fail(r, "right-composition by " + s_label(L, k) +
                        " is not a prenucleus");
      if (k.flags.idempotent && !mu.flags.nucleus)
        set_fail(r, "right-composition by idempotent " + s_label(L, k) +
                        " is not a nucleus");
    }
  });

  // Second level proper: operators on the lattice of all inflators.
  guarded(out, "negation-below-shifted-totalizer", [&](CheckResult& r) {
    const FiniteLattice& host2 = second_host();
    int skipped = 0;
    for (const auto& s : il->members()) {
      Inflator mu_s = mu_operator(L, *il, s);
      Inflator mu_t = mu_operator(L, *il, totalizer(L, s));
      auto neg = pseudocomplement(host2, *sil, mu_s);
      if (!neg) {
        ++skipped;
        continue;
      }
      if (!pointwise_leq(host2, *neg, mu_t))
        set_fail(r, "shifted negation of " + s_label(L, s) +
                        " exceeds the shifted totalizer");
    }
    if (r.status == Status::pass && skipped) {
      if (host2.is_distributive())
        set_fail(r, "pseudocomplement lost on a distributive host");
      else
        r.witness = std::to_string(skipped) +
                    " members lacked a pseudocomplement (operator host not "
                    "distributive)";
    }
  });

  guarded(out, "negation-family-agreement", [&](CheckResult& r) {
    const FiniteLattice& host2 = second_host();
    OperatorLattice iil =
        OperatorLattice::enumerate(host2, Family::all, cfg.max_enumeration);
    int agree = 0, total = 0;
    for (const auto& s : il->members()) {
      Inflator mu_s = mu_operator(L, *il, s);
      auto a = pseudocomplement(host2, *sil, mu_s);
      auto b = pseudocomplement(host2, iil, mu_s);
      if (!a || !b) continue;
      ++total;
      if (*a == *b) ++agree;
    }
    r.witness = "stable and full negations agree on " + std::to_string(agree) +
                " of " + std::to_string(total) + " shifts";
  });

  guarded(out, "negation-equality-forces-idempotent", [&](CheckResult& r) {
    const FiniteLattice& host2 = second_host();
    for (const auto& s : il->members()) {
      Inflator mu_s = mu_operator(L, *il, s);
      Inflator mu_t = mu_operator(L, *il, totalizer(L, s));
      auto neg = pseudocomplement(host2, *sil, mu_s);
      if (!neg || !(*neg == mu_t)) continue;
      if (!s.flags.idempotent)
        set_fail(r, "negation equals the shifted totalizer at the "
                    "non-idempotent " +
                        s_label(L, s));
    }
  });

  guarded(out, "mu-hat-below-st-closure", [&](CheckResult& r) {
    const FiniteLattice& P = nl->order();
    if (P.size() > cfg.second_level_bound)
      throw Error(Err::size_bound, "nucleus order exceeds the second-level "
                                   "bound");
    OperatorLattice snl =
        OperatorLattice::enumerate(P, Family::stable, cfg.max_enumeration);
    for (const auto& st : snl.members()) {
      Inflator st_closure = infty(P, st).closure;
      Elem j0 = st_closure.values[nl->bottom_index()];
      std::vector<Elem> phi(nl->size());
      for (int i = 0; i < nl->size(); ++i)
        phi[i] = nl->require(
            infty(L, compose(L, nl->nucleus(i), nl->nucleus(j0))).closure);
      Inflator mu_hat = infty(P, make_inflator(P, std::move(phi))).closure;
      if (!pointwise_leq(P, mu_hat, st_closure)) {
        set_fail(r, "closed composition shift escapes the closed self-map");
        return;
      }
    }
  });

  guarded(out, "closure-shift-equivalence", [&](CheckResult& r) {
    if (sl->size() > cfg.second_level_bound)
      throw Error(Err::size_bound, "stable host exceeds the second-level "
                                   "bound");
    const FiniteLattice& hostS = sl->lattice();
    OperatorLattice ssl =
        OperatorLattice::enumerate(hostS, Family::stable, cfg.max_enumeration);
    const Inflator top_map = top_inflator(hostS);
    for (const auto& s : sl->members()) {
      Inflator s_closure = infty(L, s).closure;
      int sc_idx = sl->index_of(s_closure);
      if (sc_idx < 0)
        throw Error(Err::member_missing, "closure left the stable family");
      Inflator mu = mu_operator(L, *sl, s_closure);
      Inflator frak_mu = partial_totalizer(hostS, ssl, mu);
      for (const auto& J : ssl.members()) {
        Inflator j_closure = infty(hostS, J).closure;
        bool cond1 = (compose(hostS, j_closure, mu) == top_map);
        bool cond2 = pointwise_leq(hostS, frak_mu, j_closure);
        bool cond3 = (j_closure.values[sc_idx] == hostS.top());
        if (cond1 != cond2 || cond2 != cond3) {
          set_fail(r, "the three closure-shift conditions split at " +
                          s_label(L, s));
          return;
        }
      }
    }
  });

  return out;
}

std::vector<CheckResult> comparison_chains(const FiniteLattice& L,
                                           const RunConfig& cfg) {
  std::vector<CheckResult> out;

  std::optional<NucleusLattice> nl;
  std::optional<Inflator> soc_n, cbd_n, gab_n;
  guarded(out, "lifted-derivatives", [&](CheckResult& r) {
    nl = NucleusLattice::build(L, cfg.max_enumeration);
    soc_n = lift_soc(*nl);
    cbd_n = lift_cbd(*nl);
    gab_n = gab_inflator(*nl);
    r.witness = "|nuclei|=" + std::to_string(nl->size());
  });
  if (!nl) {
    for (const char* id :
         {"totalizer-chain-soc-gab", "totalizer-chain-cbd",
          "totalizer-chain-boy", "totalizer-chain-cbd-vs-soc",
          "gab-below-soc", "gab-collapse-equivalence",
          "collapse-to-jump-maps", "gab-dimension-matches-strongly-atomic"}) {
      CheckResult r;
      r.id = id;
      r.status = Status::skip;
      r.witness = "nucleus enumeration exceeded a bound";
      out.push_back(r);
    }
    return out;
  }

  const FiniteLattice& P = nl->order();
  auto t_of = [&](const Inflator& d) { return totalizer(P, d); };
  Inflator soc_closed = infty(P, *soc_n).closure;
  Inflator cbd_closed = infty(P, *cbd_n).closure;

  guarded(out, "totalizer-chain-soc-gab", [&](CheckResult& r) {
    if (!pointwise_leq(P, t_of(soc_closed), t_of(*soc_n)) ||
        !pointwise_leq(P, t_of(*soc_n), t_of(*gab_n)))
      set_fail(r, "socle/gab totalizer chain breaks");
  });

  guarded(out, "totalizer-chain-cbd", [&](CheckResult& r) {
    if (!pointwise_leq(P, t_of(cbd_closed), t_of(*cbd_n)))
      set_fail(r, "closed derivative totalizer exceeds the single step");
  });

  {
    CheckResult r;
    r.id = "totalizer-chain-boy";
    r.status = Status::skip;
    r.witness = "requires Boy — out of scope";
    out.push_back(r);
  }

  guarded(out, "totalizer-chain-cbd-vs-soc", [&](CheckResult& r) {
    if (!pointwise_leq(P, t_of(*cbd_n), t_of(*soc_n)) ||
        !pointwise_leq(P, t_of(cbd_closed), t_of(soc_closed)))
      set_fail(r, "complemented-derivative totalizer escapes the socle one");
  });

  guarded(out, "gab-below-soc", [&](CheckResult& r) {
    if (!pointwise_leq(P, *gab_n, *soc_n))
      set_fail(r, "gab exceeds the lifted socle");
  });

  guarded(out, "gab-collapse-equivalence", [&](CheckResult& r) {
    if (!(t_of(*gab_n) == identity_inflator(P))) {
      r.witness = "hypothesis not triggered: t(gab) is not the identity";
      return;
    }
    const Inflator tp = top_inflator(P);
    if (!(*gab_n == *soc_n) || !(*soc_n == soc_closed) || !(soc_closed == tp))
      set_fail(r, "t(gab)=id did not collapse gab, soc, and closed soc to "
                  "the top map");
  });

  guarded(out, "collapse-to-jump-maps", [&](CheckResult& r) {
    if (!strongly_atomic(L).by_definition) {
      r.witness = "hypothesis not triggered: host is not strongly atomic";
      return;
    }
    Elem x = gab_n->values[nl->bottom_index()];
    if (!(*gab_n == u_inflator(P, x)) || !(*gab_n == iota_inflator(P, x)))
      set_fail(r, "gab differs from the jump maps at its bottom value");
  });

  guarded(out, "gab-dimension-matches-strongly-atomic", [&](CheckResult& r) {
    bool gd = gab_dimension(*nl).verdict;
    bool sa = strongly_atomic(L).agree() && strongly_atomic(L).by_definition;
    if (gd != sa)
      set_fail(r, "gab dimension and strong atomicity disagree");
  });

  return out;
}

}  // namespace idiomlab
