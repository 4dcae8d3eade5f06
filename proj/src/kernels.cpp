#include "idiomlab/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <climits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace idiomlab::kernels {

namespace {

std::atomic<int> g_parallel{-1};  // -1: decide from the runtime on first use

bool default_parallel() {
#ifdef _OPENMP
  return omp_get_max_threads() > 1;
#else
  return false;
#endif
}

}  // namespace

bool parallel_enabled() {
  int v = g_parallel.load(std::memory_order_relaxed);
  if (v < 0) {
    v = default_parallel() ? 1 : 0;
    g_parallel.store(v, std::memory_order_relaxed);
  }
  return v == 1;
}

void set_parallel(bool on) {
  g_parallel.store(on ? 1 : 0, std::memory_order_relaxed);
}

int worker_count() {
#ifdef _OPENMP
  return parallel_enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

// --- law scans ---------------------------------------------------------------

std::optional<Triple> modular_violation_serial(const FiniteLattice& L) {
  const int n = L.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!L.leq(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (L.meet(L.join(a, c), b) != L.join(a, L.meet(c, b)))
          return Triple{a, b, c};
    }
  return std::nullopt;
}

std::optional<Triple> modular_violation_parallel(const FiniteLattice& L) {
  const long long n = L.size();
  long long best = LLONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static) reduction(min : best)
#endif
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!L.leq(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (L.meet(L.join(a, c), b) != L.join(a, L.meet(c, b))) {
          long long e = (a * n + b) * n + c;
          if (e < best) best = e;
          break;  // first c is minimal for this (a,b)
        }
    }
  if (best == LLONG_MAX) return std::nullopt;
  return Triple{static_cast<Elem>(best / (n * n)),
                static_cast<Elem>((best / n) % n), static_cast<Elem>(best % n)};
}

std::optional<Triple> modular_violation(const FiniteLattice& L) {
  return parallel_enabled() ? modular_violation_parallel(L)
                            : modular_violation_serial(L);
}

std::optional<Triple> distributive_violation_serial(const FiniteLattice& L) {
  const int n = L.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return Triple{a, b, c};
  return std::nullopt;
}

std::optional<Triple> distributive_violation_parallel(const FiniteLattice& L) {
  const long long n = L.size();
  long long best = LLONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static) reduction(min : best)
#endif
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
          long long e = (a * n + b) * n + c;
          if (e < best) best = e;
          break;
        }
    }
  if (best == LLONG_MAX) return std::nullopt;
  return Triple{static_cast<Elem>(best / (n * n)),
                static_cast<Elem>((best / n) % n), static_cast<Elem>(best % n)};
}

std::optional<Triple> distributive_violation(const FiniteLattice& L) {
  return parallel_enabled() ? distributive_violation_parallel(L)
                            : distributive_violation_serial(L);
}

// --- map enumeration ----------------------------------------------------------

namespace {

// Depth-first assignment along a linear extension. Every already-assigned
// element comparable with the current one lies below it, so the only
// constraint is a join lower bound.
void assign_maps(const FiniteLattice& L, const std::vector<Elem>& order,
                 size_t depth, std::vector<Elem>& partial,
                 std::vector<std::vector<Elem>>& out, long long bound,
                 std::atomic<long long>* shared_count) {
  const int n = L.size();
  if (depth == order.size()) {
    if (shared_count) {
      if (shared_count->fetch_add(1, std::memory_order_relaxed) >= bound)
        return;  // over budget; caller reports
    } else if (static_cast<long long>(out.size()) >= bound) {
      throw Error(Err::enumeration_bound,
                  "inflator enumeration exceeds the max_enumeration bound of " +
                    std::to_string(bound));
    }
    std::vector<Elem> table(n);
    for (int i = 0; i < n; ++i) table[order[i]] = partial[i];
    out.push_back(std::move(table));
    return;
  }
  Elem x = order[depth];
  Elem lo = x;
  for (size_t i = 0; i < depth; ++i)
    if (L.leq(order[i], x)) lo = L.join(lo, partial[i]);
  for (Elem v = 0; v < n; ++v) {
    if (!L.leq(lo, v)) continue;
    partial[depth] = v;
    assign_maps(L, order, depth + 1, partial, out, bound, shared_count);
    if (shared_count &&
        shared_count->load(std::memory_order_relaxed) > bound)
      return;
  }
}

}  // namespace

std::vector<std::vector<Elem>> inflationary_maps_serial(const FiniteLattice& L,
                                                        long long bound) {
  std::vector<Elem> order = L.by_linear_extension();
  std::vector<Elem> partial(order.size());
  std::vector<std::vector<Elem>> out;
  assign_maps(L, order, 0, partial, out, bound, nullptr);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> inflationary_maps_parallel(
    const FiniteLattice& L, long long bound) {
  const int n = L.size();
  std::vector<Elem> order = L.by_linear_extension();
  if (n == 1) return {{L.bottom()}};
  // The first slot is the bottom element; every value is a candidate there.
  std::vector<std::vector<std::vector<Elem>>> branches(n);
  std::atomic<long long> count{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (Elem v = 0; v < n; ++v) {
    std::vector<Elem> partial(order.size());
    partial[0] = v;
    assign_maps(L, order, 1, partial, branches[v], bound, &count);
  }
  if (count.load() > bound)
    throw Error(Err::enumeration_bound,
                "inflator enumeration exceeds the max_enumeration bound of " +
                    std::to_string(bound));
  std::vector<std::vector<Elem>> out;
  out.reserve(count.load());
  for (auto& b : branches)
    for (auto& t : b) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> inflationary_maps(const FiniteLattice& L,
                                                 long long bound) {
  return parallel_enabled() ? inflationary_maps_parallel(L, bound)
                            : inflationary_maps_serial(L, bound);
}

// --- per-member classification --------------------------------------------------

namespace {

MapFlags flags_of(const FiniteLattice& L, const std::vector<Elem>& f) {
  const int n = L.size();
  MapFlags r{true, true, true};
  for (Elem x = 0; x < n && r.idempotent; ++x)
    if (f[f[x]] != f[x]) r.idempotent = false;
  for (Elem x = 0; x < n && (r.stable || r.prenucleus); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem fm = f[L.meet(x, y)];
      if (r.stable && !L.leq(L.meet(f[x], y), fm)) r.stable = false;
      if (r.prenucleus && fm != L.meet(f[x], f[y])) r.prenucleus = false;
      if (!r.stable && !r.prenucleus) break;
    }
  return r;
}

}  // namespace

std::vector<MapFlags> map_flags_serial(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& tables) {
  std::vector<MapFlags> out(tables.size());
  for (size_t i = 0; i < tables.size(); ++i) out[i] = flags_of(L, tables[i]);
  return out;
}

std::vector<MapFlags> map_flags_parallel(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& tables) {
  std::vector<MapFlags> out(tables.size());
  const long long m = static_cast<long long>(tables.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < m; ++i) out[i] = flags_of(L, tables[i]);
  return out;
}

std::vector<MapFlags> map_flags(const FiniteLattice& L,
                                const std::vector<std::vector<Elem>>& tables) {
  return parallel_enabled() ? map_flags_parallel(L, tables)
                            : map_flags_serial(L, tables);
}

// --- pointwise order matrix ------------------------------------------------------

namespace {

bool table_leq(const FiniteLattice& L, const std::vector<Elem>& f,
               const std::vector<Elem>& g) {
  for (int a = 0; a < L.size(); ++a)
    if (!L.leq(f[a], g[a])) return false;
  return true;
}

}  // namespace

std::vector<uint8_t> pointwise_order_serial(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& tables) {
  const size_t m = tables.size();
  std::vector<uint8_t> leq(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      leq[i * m + j] = table_leq(L, tables[i], tables[j]) ? 1 : 0;
  return leq;
}

std::vector<uint8_t> pointwise_order_parallel(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& tables) {
  const long long m = static_cast<long long>(tables.size());
  std::vector<uint8_t> leq(m * m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      leq[i * m + j] = table_leq(L, tables[i], tables[j]) ? 1 : 0;
  return leq;
}

std::vector<uint8_t> pointwise_order(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& tables) {
  return parallel_enabled() ? pointwise_order_parallel(L, tables)
                            : pointwise_order_serial(L, tables);
}

// --- screened extremum -------------------------------------------------------------

namespace {

bool qualifies(const FiniteLattice& L, const std::vector<Elem>& z,
               const std::vector<Elem>& d, bool want_top) {
  const Elem top = L.top();
  for (int a = 0; a < L.size(); ++a) {
    Elem got = z[d[a]];
    if (got != (want_top ? top : d[a])) return false;
  }
  return true;
}

void fold(const FiniteLattice& L, std::vector<Elem>& acc,
          const std::vector<Elem>& z, Reduce reduce) {
  for (int a = 0; a < L.size(); ++a)
    acc[a] = reduce == Reduce::meet ? L.meet(acc[a], z[a]) : L.join(acc[a], z[a]);
}

}  // namespace

std::optional<std::vector<Elem>> screened_extremum_serial(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& members,
    const std::vector<Elem>& d, bool want_top, Reduce reduce) {
  const int n = L.size();
  std::vector<Elem> acc(n, reduce == Reduce::meet ? L.top() : L.bottom());
  bool any = false;
  for (const auto& z : members)
    if (qualifies(L, z, d, want_top)) {
      fold(L, acc, z, reduce);
      any = true;
    }
  if (!any) return std::nullopt;
  return acc;
}

std::optional<std::vector<Elem>> screened_extremum_parallel(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& members,
    const std::vector<Elem>& d, bool want_top, Reduce reduce) {
  const int n = L.size();
  const Elem neutral = reduce == Reduce::meet ? L.top() : L.bottom();
  std::vector<Elem> acc(n, neutral);
  bool any = false;
  const long long m = static_cast<long long>(members.size());
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<Elem> local(n, neutral);
    bool hit = false;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < m; ++i)
      if (qualifies(L, members[i], d, want_top)) {
        fold(L, local, members[i], reduce);
        hit = true;
      }
#pragma omp critical(idiomlab_extremum)
    {
      if (hit) {
        fold(L, acc, local, reduce);
        any = true;
      }
    }
  }
#else
  for (long long i = 0; i < m; ++i)
    if (qualifies(L, members[i], d, want_top)) {
      fold(L, acc, members[i], reduce);
      any = true;
    }
#endif
  if (!any) return std::nullopt;
  return acc;
}

std::optional<std::vector<Elem>> screened_extremum(
    const FiniteLattice& L, const std::vector<std::vector<Elem>>& members,
    const std::vector<Elem>& d, bool want_top, Reduce reduce) {
  return parallel_enabled()
             ? screened_extremum_parallel(L, members, d, want_top, reduce)
             : screened_extremum_serial(L, members, d, want_top, reduce);
}

}  // namespace idiomlab::kernels
