#include "idiomlab/inflator.hpp"

#include <algorithm>

#include "idiomlab/kernels.hpp"

namespace idiomlab {

InflatorFlags compute_flags(const FiniteLattice& L,
                            const std::vector<Elem>& values) {
  kernels::MapFlags f = kernels::map_flags(L, {values})[0];
  InflatorFlags out;
  out.stable = f.stable;
  out.prenucleus = f.prenucleus;
  out.idempotent = f.idempotent;
  out.nucleus = f.prenucleus && f.idempotent;
  return out;
}

Inflator make_inflator(const FiniteLattice& L, std::vector<Elem> values) {
  const int n = L.size();
  if (static_cast<int>(values.size()) != n)
    throw Error(Err::bad_input, "value table size mismatch");
  for (Elem a = 0; a < n; ++a) {
    if (values[a] < 0 || values[a] >= n)
      throw Error(Err::bad_input, "value out of range at " + L.label(a));
    if (!L.leq(a, values[a]))
      throw Error(Err::not_inflationary,
                  "map drops " + L.label(a) + " to " + L.label(values[a]));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (L.leq(a, b) && !L.leq(values[a], values[b]))
        throw Error(Err::not_monotone, "map breaks order on " + L.label(a) +
                                           " <= " + L.label(b));
  Inflator d;
  d.host = L.digest();
  d.flags = compute_flags(L, values);
  d.values = std::move(values);
  return d;
}

Inflator make_inflator(const FiniteLattice& L,
                       const std::map<std::string, std::string>& table) {
  std::vector<Elem> values(L.size(), -1);
  for (const auto& [from, to] : table) values[L.index_of(from)] = L.index_of(to);
  for (Elem a = 0; a < L.size(); ++a)
    if (values[a] < 0)
      throw Error(Err::bad_input, "map misses element " + L.label(a));
  return make_inflator(L, std::move(values));
}

Inflator identity_inflator(const FiniteLattice& L) {
  std::vector<Elem> v(L.size());
  for (Elem a = 0; a < L.size(); ++a) v[a] = a;
  return make_inflator(L, std::move(v));
}

Inflator top_inflator(const FiniteLattice& L) {
  return make_inflator(L, std::vector<Elem>(L.size(), L.top()));
}

Inflator o_inflator(const FiniteLattice& L, Elem b) {
  std::vector<Elem> v(L.size());
  for (Elem a = 0; a < L.size(); ++a) v[a] = L.leq(b, a) ? L.top() : a;
  return make_inflator(L, std::move(v));
}

Inflator u_inflator(const FiniteLattice& L, Elem a) {
  std::vector<Elem> v(L.size());
  for (Elem b = 0; b < L.size(); ++b) v[b] = L.join(a, b);
  return make_inflator(L, std::move(v));
}

Inflator iota_inflator(const FiniteLattice& L, Elem a) {
  std::vector<Elem> v(L.size(), L.top());
  v[L.bottom()] = a;
  return make_inflator(L, std::move(v));
}

void require_same_host(const Inflator& d, const Inflator& k) {
  if (d.host != k.host)
    throw Error(Err::host_mismatch, "operands live on different lattices");
}

void require_host(const FiniteLattice& L, const Inflator& d) {
  if (d.host != L.digest())
    throw Error(Err::host_mismatch,
                "inflator does not belong to lattice " + L.name());
}

Inflator compose(const FiniteLattice& L, const Inflator& d, const Inflator& k) {
  require_host(L, d);
  require_same_host(d, k);
  std::vector<Elem> v(L.size());
  for (Elem a = 0; a < L.size(); ++a) v[a] = d.values[k.values[a]];
  return make_inflator(L, std::move(v));
}

bool pointwise_leq(const FiniteLattice& L, const Inflator& a,
                   const Inflator& b) {
  require_host(L, a);
  require_same_host(a, b);
  for (Elem x = 0; x < L.size(); ++x)
    if (!L.leq(a.values[x], b.values[x])) return false;
  return true;
}

bool is_directed_family(const FiniteLattice& L,
                        const std::vector<Inflator>& family) {
  for (const auto& d : family)
    for (const auto& k : family) {
      bool bounded = false;
      for (const auto& z : family)
        if (pointwise_leq(L, d, z) && pointwise_leq(L, k, z)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

namespace {

Inflator pointwise_extremum(const FiniteLattice& L,
                            const std::vector<Inflator>& family, bool meet) {
  if (family.empty())
    throw Error(Err::empty_family, "pointwise extremum of an empty family");
  for (const auto& d : family) require_host(L, d);
  std::vector<Elem> v = family.front().values;
  for (size_t i = 1; i < family.size(); ++i)
    for (Elem a = 0; a < L.size(); ++a)
      v[a] = meet ? L.meet(v[a], family[i].values[a])
                  : L.join(v[a], family[i].values[a]);
  return make_inflator(L, std::move(v));
}

}  // namespace

Inflator pointwise_meet(const FiniteLattice& L,
                        const std::vector<Inflator>& family) {
  return pointwise_extremum(L, family, true);
}

Inflator pointwise_join(const FiniteLattice& L,
                        const std::vector<Inflator>& family) {
  return pointwise_extremum(L, family, false);
}

ClosurePower infty(const FiniteLattice& L, const Inflator& d) {
  require_host(L, d);
  Inflator cur = d;
  int steps = 0;
  for (;;) {
    ++steps;
    Inflator next = compose(L, d, cur);
    if (next.values == cur.values) return {cur, steps};
    cur = std::move(next);
    if (steps > L.size() + 1)
      throw Error(Err::bad_input, "iteration failed to stabilize");
  }
}

Inflator totalizer(const FiniteLattice& L, const Inflator& d) {
  require_host(L, d);
  return o_inflator(L, d.values[L.bottom()]);
}

Inflator equalizer(const FiniteLattice& L, const Inflator& d) {
  require_host(L, d);
  std::vector<uint8_t> in_image(L.size(), 0);
  for (Elem a = 0; a < L.size(); ++a) in_image[d.values[a]] = 1;
  std::vector<Elem> v(L.size());
  for (Elem a = 0; a < L.size(); ++a) {
    Elem acc = L.top();
    for (Elem b = 0; b < L.size(); ++b)
      if (in_image[b] && L.leq(a, b)) acc = L.meet(acc, b);
    v[a] = acc;
  }
  return make_inflator(L, std::move(v));
}

}  // namespace idiomlab
