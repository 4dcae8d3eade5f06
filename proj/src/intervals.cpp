#include "idiomlab/intervals.hpp"

#include <algorithm>

#include "idiomlab/error.hpp"

namespace idiomlab {

IntervalSet::IntervalSet(const FiniteLattice& L)
    : host_digest_(L.digest()),
      n_(L.size()),
      flags_(static_cast<size_t>(L.size()) * L.size(), 0),
      host_(&L) {}

IntervalSet::IntervalSet(const FiniteLattice& L,
                         const std::vector<Interval>& seed)
    : IntervalSet(L) {
  for (const auto& iv : seed) insert(iv.lo, iv.hi);
}

bool IntervalSet::insert(Elem lo, Elem hi) {
  if (lo < 0 || hi < 0 || lo >= n_ || hi >= n_ || !host_->leq(lo, hi))
    throw Error(Err::bad_input, "not an interval: endpoints out of order");
  uint8_t& f = flags_[lo * n_ + hi];
  if (f) return false;
  f = 1;
  ++count_;
  return true;
}

std::vector<Interval> IntervalSet::items() const {
  std::vector<Interval> out;
  out.reserve(count_);
  for (Elem lo = 0; lo < n_; ++lo)
    for (Elem hi = 0; hi < n_; ++hi)
      if (flags_[lo * n_ + hi]) out.push_back({lo, hi});
  return out;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  if (host_digest_ != other.host_digest_)
    throw Error(Err::host_mismatch, "interval sets live on different hosts");
  for (size_t i = 0; i < flags_.size(); ++i)
    if (flags_[i] && !other.flags_[i]) return false;
  return true;
}

IntervalSet IntervalSet::unite(const IntervalSet& a, const IntervalSet& b) {
  if (a.host_digest_ != b.host_digest_)
    throw Error(Err::host_mismatch, "interval sets live on different hosts");
  IntervalSet out = a;
  for (size_t i = 0; i < out.flags_.size(); ++i)
    if (b.flags_[i] && !out.flags_[i]) {
      out.flags_[i] = 1;
      ++out.count_;
    }
  return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& a, const IntervalSet& b) {
  if (a.host_digest_ != b.host_digest_)
    throw Error(Err::host_mismatch, "interval sets live on different hosts");
  IntervalSet out = a;
  for (size_t i = 0; i < out.flags_.size(); ++i)
    if (out.flags_[i] && !b.flags_[i]) {
      out.flags_[i] = 0;
      --out.count_;
    }
  return out;
}

IntervalSet all_intervals(const FiniteLattice& L) {
  IntervalSet out(L);
  for (Elem lo = 0; lo < L.size(); ++lo)
    for (Elem hi = 0; hi < L.size(); ++hi)
      if (L.leq(lo, hi)) out.insert(lo, hi);
  return out;
}

IntervalSet trivial_intervals(const FiniteLattice& L) {
  IntervalSet out(L);
  for (Elem a = 0; a < L.size(); ++a) out.insert(a, a);
  return out;
}

const char* closure_level_name(ClosureLevel level) {
  switch (level) {
    case ClosureLevel::abstract: return "abstract";
    case ClosureLevel::basic: return "basic";
    case ClosureLevel::congruence: return "congruence";
    case ClosureLevel::division: return "division";
  }
  return "?";
}

namespace {

int rank(ClosureLevel level) { return static_cast<int>(level); }

}  // namespace

IntervalSet close(const FiniteLattice& L, const IntervalSet& seed,
                  ClosureLevel level) {
  if (seed.host_digest() != L.digest())
    throw Error(Err::host_mismatch, "interval set does not match the host");
  IntervalSet B = seed;
  std::vector<Interval> work = B.items();
  auto push = [&](Elem lo, Elem hi) {
    if (B.insert(lo, hi)) work.push_back({lo, hi});
  };

  if (rank(level) >= rank(ClosureLevel::basic))
    for (Elem a = 0; a < L.size(); ++a) push(a, a);

  while (true) {
    while (!work.empty()) {
      Interval iv = work.back();
      work.pop_back();
      const Elem a = iv.lo, b = iv.hi;

      // Similarity: [a,b] as the left leg gives [a ^ c, c] whenever
      // a v c = b; as the right leg gives [c, c v b] whenever c ^ b = a.
      for (Elem c = 0; c < L.size(); ++c) {
        if (L.join(a, c) == b) push(L.meet(a, c), c);
        if (L.meet(c, b) == a) push(c, L.join(c, b));
      }

      if (rank(level) >= rank(ClosureLevel::basic))
        for (Elem a2 = 0; a2 < L.size(); ++a2) {
          if (!(L.leq(a, a2) && L.leq(a2, b))) continue;
          for (Elem b2 = 0; b2 < L.size(); ++b2)
            if (L.leq(a2, b2) && L.leq(b2, b)) push(a2, b2);
        }

      if (rank(level) >= rank(ClosureLevel::congruence))
        for (Elem c = 0; c < L.size(); ++c) {
          if (L.leq(b, c) && B.contains(b, c)) push(a, c);
          if (L.leq(c, a) && B.contains(c, a)) push(c, b);
        }
    }

    if (rank(level) < rank(ClosureLevel::division)) break;
    bool grew = false;
    for (Elem a = 0; a < L.size(); ++a) {
      Elem j = a;
      for (Elem x = 0; x < L.size(); ++x)
        if (L.leq(a, x) && B.contains(a, x)) j = L.join(j, x);
      if (!B.contains(a, j)) {
        push(a, j);
        grew = true;
      }
    }
    if (!grew) break;
  }
  return B;
}

bool is_closed(const FiniteLattice& L, const IntervalSet& B,
               ClosureLevel level) {
  const int n = L.size();
  for (Elem l = 0; l < n; ++l)
    for (Elem r = 0; r < n; ++r) {
      bool left = B.contains(l, L.join(l, r));
      bool right = B.contains(L.meet(l, r), r);
      if (left != right) return false;
    }
  if (rank(level) < rank(ClosureLevel::basic)) return true;

  for (Elem a = 0; a < n; ++a)
    if (!B.contains(a, a)) return false;
  for (const auto& iv : B.items())
    for (Elem a2 = 0; a2 < n; ++a2) {
      if (!(L.leq(iv.lo, a2) && L.leq(a2, iv.hi))) continue;
      for (Elem b2 = 0; b2 < n; ++b2)
        if (L.leq(a2, b2) && L.leq(b2, iv.hi) && !B.contains(a2, b2))
          return false;
    }
  if (rank(level) < rank(ClosureLevel::congruence)) return true;

  for (const auto& iv : B.items())
    for (Elem c = 0; c < n; ++c)
      if (L.leq(iv.hi, c) && B.contains(iv.hi, c) && !B.contains(iv.lo, c))
        return false;
  if (rank(level) < rank(ClosureLevel::division)) return true;

  for (Elem a = 0; a < n; ++a) {
    Elem j = a;
    for (Elem x = 0; x < n; ++x)
      if (L.leq(a, x) && B.contains(a, x)) j = L.join(j, x);
    if (!B.contains(a, j)) return false;
  }
  return true;
}

Inflator induced_inflator(const FiniteLattice& L, const IntervalSet& B) {
  if (B.host_digest() != L.digest())
    throw Error(Err::host_mismatch, "interval set does not match the host");
  std::vector<Elem> values(L.size());
  for (Elem a = 0; a < L.size(); ++a) {
    if (!B.contains(a, a))
      throw Error(Err::not_basic, "missing trivial interval at " + L.label(a));
    Elem j = a;
    for (Elem x = 0; x < L.size(); ++x)
      if (L.leq(a, x) && B.contains(a, x)) j = L.join(j, x);
    values[a] = j;
  }
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.leq(a, b) && !L.leq(values[a], values[b]))
        throw Error(Err::not_basic,
                    "induced map is not monotone; the set is not basic");
  return make_inflator(L, std::move(values));
}

IntervalSet collapsed_intervals(const FiniteLattice& L, const Inflator& j) {
  require_host(L, j);
  IntervalSet out(L);
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.leq(a, b) && j.values[a] == j.values[b]) out.insert(a, b);
  return out;
}

IntervalClass classify(const FiniteLattice& L, const Interval& iv) {
  if (!L.leq(iv.lo, iv.hi))
    throw Error(Err::bad_input, "not an interval: endpoints out of order");
  const Elem a = iv.lo, b = iv.hi;
  const int n = L.size();
  auto inside = [&](Elem x) { return L.leq(a, x) && L.leq(x, b); };

  IntervalClass out;
  out.trivial = (a == b);
  out.simple = (a != b) && L.covers(a, b);

  out.complemented = true;
  for (Elem x = 0; x < n && out.complemented; ++x) {
    if (!inside(x)) continue;
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y)
      if (inside(y) && L.meet(x, y) == a && L.join(x, y) == b) found = true;
    out.complemented = found;
  }

  auto atomic_pair = [&](Elem c, Elem d) {
    for (Elem z = 0; z < n; ++z)
      if (z != c && L.leq(z, d) && L.covers(c, z)) return true;
    return false;
  };

  out.atomic = true;
  for (Elem d = 0; d < n && out.atomic; ++d)
    if (inside(d) && d != a && !atomic_pair(a, d)) out.atomic = false;

  out.strongly_atomic = true;
  for (Elem c = 0; c < n && out.strongly_atomic; ++c) {
    if (!inside(c)) continue;
    for (Elem d = 0; d < n && out.strongly_atomic; ++d)
      if (inside(d) && L.leq(c, d) && c != d && !atomic_pair(c, d))
        out.strongly_atomic = false;
  }

  out.uniform = (a != b);
  for (Elem x = 0; x < n && out.uniform; ++x) {
    if (!inside(x) || x == a) continue;
    for (Elem y = 0; y < n && out.uniform; ++y)
      if (inside(y) && y != a && L.meet(x, y) == a) out.uniform = false;
  }
  return out;
}

RelativeClass classify_relative(const FiniteLattice& L, const IntervalSet& B,
                                const Interval& iv) {
  if (B.host_digest() != L.digest())
    throw Error(Err::host_mismatch, "interval set does not match the host");
  if (!L.leq(iv.lo, iv.hi))
    throw Error(Err::bad_input, "not an interval: endpoints out of order");
  const Elem a = iv.lo, b = iv.hi;
  const int n = L.size();
  auto inside = [&](Elem x) { return L.leq(a, x) && L.leq(x, b); };

  RelativeClass out;
  out.rel_simple = true;
  for (Elem x = 0; x < n && out.rel_simple; ++x)
    if (inside(x) && !B.contains(a, x) && !B.contains(x, b))
      out.rel_simple = false;

  out.rel_complemented = true;
  for (Elem x = 0; x < n && out.rel_complemented; ++x) {
    if (!inside(x)) continue;
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y)
      if (inside(y) && B.contains(a, L.meet(x, y)) &&
          B.contains(L.join(x, y), b))
        found = true;
    out.rel_complemented = found;
  }

  out.rel_critical = true;
  for (Elem x = 0; x < n && out.rel_critical; ++x)
    if (inside(x) && x != a && !B.contains(x, b)) out.rel_critical = false;

  return out;
}

IntervalSet simple_intervals(const FiniteLattice& L) {
  IntervalSet out(L);
  for (const auto& [lo, hi] : L.cover_pairs()) out.insert(lo, hi);
  return out;
}

IntervalSet smp_set(const FiniteLattice& L) {
  return IntervalSet::unite(simple_intervals(L), trivial_intervals(L));
}

IntervalSet cmp_set(const FiniteLattice& L) {
  IntervalSet out(L);
  for (Elem lo = 0; lo < L.size(); ++lo)
    for (Elem hi = 0; hi < L.size(); ++hi)
      if (L.leq(lo, hi) && classify(L, {lo, hi}).complemented)
        out.insert(lo, hi);
  return out;
}

IntervalSet sa_set(const FiniteLattice& L) {
  const int n = L.size();
  // atomic_pair[c*n+d]: some atom over c lies under d.
  std::vector<uint8_t> atomic_pair(static_cast<size_t>(n) * n, 0);
  for (Elem c = 0; c < n; ++c)
    for (Elem d = 0; d < n; ++d) {
      if (!L.leq(c, d) || c == d) continue;
      for (Elem z = 0; z < n; ++z)
        if (L.leq(z, d) && L.covers(c, z)) {
          atomic_pair[c * n + d] = 1;
          break;
        }
    }
  IntervalSet out(L);
  for (Elem lo = 0; lo < n; ++lo)
    for (Elem hi = 0; hi < n; ++hi) {
      if (!L.leq(lo, hi)) continue;
      bool ok = true;
      for (Elem c = 0; c < n && ok; ++c) {
        if (!(L.leq(lo, c) && L.leq(c, hi))) continue;
        for (Elem d = 0; d < n && ok; ++d)
          if (L.leq(lo, d) && L.leq(d, hi) && L.leq(c, d) && c != d &&
              !atomic_pair[c * n + d])
            ok = false;
      }
      if (ok) out.insert(lo, hi);
    }
  return out;
}

IntervalSet rel_simple_set(const FiniteLattice& L, const IntervalSet& B) {
  IntervalSet out(L);
  for (Elem lo = 0; lo < L.size(); ++lo)
    for (Elem hi = 0; hi < L.size(); ++hi)
      if (L.leq(lo, hi) && classify_relative(L, B, {lo, hi}).rel_simple)
        out.insert(lo, hi);
  return out;
}

IntervalSet rel_complemented_set(const FiniteLattice& L,
                                 const IntervalSet& B) {
  IntervalSet out(L);
  for (Elem lo = 0; lo < L.size(); ++lo)
    for (Elem hi = 0; hi < L.size(); ++hi)
      if (L.leq(lo, hi) && classify_relative(L, B, {lo, hi}).rel_complemented)
        out.insert(lo, hi);
  return out;
}

IntervalSet rel_critical_set(const FiniteLattice& L, const IntervalSet& B) {
  IntervalSet out(L);
  for (Elem lo = 0; lo < L.size(); ++lo)
    for (Elem hi = 0; hi < L.size(); ++hi)
      if (L.leq(lo, hi) && classify_relative(L, B, {lo, hi}).rel_critical)
        out.insert(lo, hi);
  return out;
}

Inflator soc(const FiniteLattice& L) {
  return induced_inflator(L, smp_set(L));
}

Inflator cbd(const FiniteLattice& L) {
  return induced_inflator(L, cmp_set(L));
}

}  // namespace idiomlab
