#include "idiomlab/nuclei.hpp"

#include <algorithm>

#include "idiomlab/error.hpp"

namespace idiomlab {

namespace {

void require_interval(const FiniteLattice& L, Elem a, Elem b) {
  if (a < 0 || b < 0 || a >= L.size() || b >= L.size() || !L.leq(a, b))
    throw Error(Err::bad_parameter, "expected elements with a <= b");
}

}  // namespace

NucleusLattice NucleusLattice::build(const FiniteLattice& host,
                                     long long bound, int lattice_cap) {
  NucleusLattice out;
  out.host_ = host;
  out.family_ =
      OperatorLattice::enumerate(host, Family::nucleus, bound, lattice_cap);
  if (!out.family_.has_lattice())
    throw Error(Err::size_bound,
                "nucleus family too large for a materialized order");
  const FiniteLattice& P = out.family_.lattice();

  if (!P.is_distributive()) {
    const Triple& w = *P.distributive_witness();
    throw Error(Err::frame_violation,
                "nucleus order is not distributive at (" + P.label(w.a) +
                    ", " + P.label(w.b) + ", " + P.label(w.c) + ")");
  }

  // Pairwise route agreement: the member order's meet must be the pointwise
  // meet and its join must be the closure of the pointwise join.
  const auto& members = out.family_.members();
  const int m = static_cast<int>(members.size());
  for (int i = 0; i < m; ++i)
    for (int k = i; k < m; ++k) {
      Inflator lo = pointwise_meet(host, {members[i], members[k]});
      int lo_idx = out.family_.index_of(lo);
      if (lo_idx < 0 || lo_idx != P.meet(i, k))
        throw Error(Err::frame_violation,
                    "pointwise meet of nuclei " + P.label(i) + " and " +
                        P.label(k) + " is not their order meet");
      Inflator hi = infty(host, pointwise_join(host, {members[i], members[k]}))
                        .closure;
      int hi_idx = out.family_.index_of(hi);
      if (hi_idx < 0 || hi_idx != P.join(i, k))
        throw Error(Err::frame_violation,
                    "closed pointwise join of nuclei " + P.label(i) + " and " +
                        P.label(k) + " is not their order join");
    }
  return out;
}

Inflator NucleusLattice::meet(const Inflator& a, const Inflator& b) const {
  int ia = require(a), ib = require(b);
  return nucleus(order().meet(ia, ib));
}

Inflator NucleusLattice::join(const Inflator& a, const Inflator& b) const {
  int ia = require(a), ib = require(b);
  return nucleus(order().join(ia, ib));
}

Inflator NucleusLattice::join_all(const std::vector<int>& indices) const {
  Elem acc = order().bottom();
  for (int i : indices) acc = order().join(acc, i);
  return nucleus(acc);
}

Quotient quotient(const FiniteLattice& L, const Inflator& j) {
  require_host(L, j);
  if (!j.flags.nucleus)
    throw Error(Err::not_a_nucleus, "quotient requires a nucleus");

  Quotient out;
  std::vector<Elem> where(L.size(), -1);
  std::vector<std::string> labels;
  for (Elem a = 0; a < L.size(); ++a)
    if (j.values[a] == a) {
      where[a] = static_cast<Elem>(out.embed.size());
      out.embed.push_back(a);
      labels.push_back(L.label(a));
    }
  const int m = static_cast<int>(out.embed.size());
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      leq[p * m + q] = L.leq(out.embed[p], out.embed[q]) ? 1 : 0;
  out.lattice = FiniteLattice::from_order("fixed points of a nucleus on " +
                                              L.name(),
                                          labels, std::move(leq), m);
  out.project.resize(L.size());
  for (Elem a = 0; a < L.size(); ++a) out.project[a] = where[j.values[a]];
  return out;
}

Inflator chi(const NucleusLattice& NL, Elem a, Elem b) {
  const FiniteLattice& L = NL.host();
  require_interval(L, a, b);
  std::vector<int> qualifying;
  for (int i = 0; i < NL.size(); ++i)
    if (L.meet(NL.nucleus(i).values[a], b) == a) qualifying.push_back(i);
  Inflator best = NL.join_all(qualifying);
  if (L.meet(best.values[a], b) != a)
    throw Error(Err::condition_lost_at_join,
                "join of qualifying nuclei no longer fixes " + L.label(a) +
                    " against " + L.label(b));
  return best;
}

Inflator xi(const NucleusLattice& NL, Elem a, Elem b) {
  const FiniteLattice& L = NL.host();
  require_interval(L, a, b);
  Elem acc = NL.order().top();
  for (int i = 0; i < NL.size(); ++i)
    if (L.leq(b, NL.nucleus(i).values[a])) acc = NL.order().meet(acc, i);
  Inflator least = NL.nucleus(acc);

  IntervalSet seed(L);
  seed.insert(a, b);
  Inflator via_intervals =
      induced_inflator(L, close(L, seed, ClosureLevel::division));
  if (!(via_intervals == least))
    throw Error(Err::route_disagreement,
                "division closure of [" + L.label(a) + "," + L.label(b) +
                    "] disagrees with the screened least nucleus");
  return least;
}

bool is_inert(const NucleusLattice& NL, Elem a, Elem b) {
  const FiniteLattice& L = NL.host();
  require_interval(L, a, b);
  if (a == b)
    throw Error(Err::bad_parameter, "inertness concerns nontrivial intervals");
  Inflator target = chi(NL, a, b);
  for (Elem x = 0; x < L.size(); ++x)
    if (x != a && L.leq(a, x) && L.leq(x, b) && !(chi(NL, a, x) == target))
      return false;
  return true;
}

GabResult gab(const NucleusLattice& NL, const Inflator& j) {
  const FiniteLattice& L = NL.host();
  int jidx = NL.require(j);

  IntervalSet dj = collapsed_intervals(L, j);
  IntervalSet crt = rel_critical_set(L, dj);

  Elem raw = NL.order().bottom();
  for (const auto& iv : crt.items())
    raw = NL.order().join(raw, NL.require(xi(NL, iv.lo, iv.hi)));

  GabResult out;
  out.raw_join_dominates = NL.order().leq(jidx, raw);
  out.value = NL.nucleus(NL.order().join(raw, jidx));

  Inflator via_base =
      induced_inflator(L, close(L, crt, ClosureLevel::division));
  if (!(via_base == out.value))
    throw Error(Err::route_disagreement,
                "division closure of the critical set disagrees with the "
                    "joined nucleus route");
  return out;
}

Inflator gab_inflator(const NucleusLattice& NL) {
  std::vector<Elem> values(NL.size());
  for (int i = 0; i < NL.size(); ++i)
    values[i] = NL.require(gab(NL, NL.nucleus(i)).value);
  return make_inflator(NL.order(), std::move(values));
}

std::vector<int> points(const NucleusLattice& NL) {
  const FiniteLattice& P = NL.order();
  std::vector<int> uppers(P.size(), 0);
  for (const auto& [lo, hi] : P.cover_pairs()) ++uppers[lo];
  std::vector<int> out;
  for (int i = 0; i < P.size(); ++i)
    if (uppers[i] == 1) out.push_back(i);
  return out;
}

std::vector<int> g_points(const NucleusLattice& NL) {
  std::vector<int> out;
  for (int i : points(NL))
    if (!(gab(NL, NL.nucleus(i)).value == NL.nucleus(i))) out.push_back(i);
  return out;
}

Inflator lift_soc(const NucleusLattice& NL) { return soc(NL.order()); }

Inflator lift_cbd(const NucleusLattice& NL) { return cbd(NL.order()); }

}  // namespace idiomlab
