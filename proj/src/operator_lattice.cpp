#include "idiomlab/operator_lattice.hpp"

#include <algorithm>

#include "idiomlab/error.hpp"
#include "idiomlab/kernels.hpp"

namespace idiomlab {

const char* family_name(Family f) {
  switch (f) {
    case Family::all: return "all";
    case Family::stable: return "stable";
    case Family::prenucleus: return "prenucleus";
    case Family::idempotent: return "idempotent";
    case Family::nucleus: return "nucleus";
    case Family::totalizer: return "totalizer";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::all, Family::stable, Family::prenucleus,
                   Family::idempotent, Family::nucleus, Family::totalizer})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

namespace {

bool keeps(Family family, const kernels::MapFlags& f) {
  switch (family) {
    case Family::all: return true;
    case Family::stable: return f.stable;
    case Family::prenucleus: return f.prenucleus;
    case Family::idempotent: return f.idempotent;
    case Family::nucleus: return f.prenucleus && f.idempotent;
    case Family::totalizer: return false;  // handled separately
  }
  return false;
}

}  // namespace

OperatorLattice OperatorLattice::enumerate(const FiniteLattice& host,
                                           Family family,
                                           long long enumeration_bound,
                                           int lattice_cap) {
  OperatorLattice out;
  out.family_ = family;
  out.host_digest_ = host.digest();

  std::vector<std::vector<Elem>> tables;
  if (family == Family::totalizer) {
    // One map per threshold, distinct thresholds can collide only when the
    // host is degenerate, so dedupe after sorting.
    for (Elem b = 0; b < host.size(); ++b)
      tables.push_back(o_inflator(host, b).values);
    std::sort(tables.begin(), tables.end());
    tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  } else {
    auto all = kernels::inflationary_maps(host, enumeration_bound);
    auto flags = kernels::map_flags(host, all);
    tables.reserve(all.size());
    for (size_t i = 0; i < all.size(); ++i)
      if (keeps(family, flags[i])) tables.push_back(std::move(all[i]));
  }

  out.members_.reserve(tables.size());
  for (auto& t : tables) out.members_.push_back(make_inflator(host, t));

  if (static_cast<int>(out.members_.size()) <= lattice_cap &&
      !out.members_.empty()) {
    std::vector<std::vector<Elem>> value_tables;
    value_tables.reserve(out.members_.size());
    for (const auto& m : out.members_) value_tables.push_back(m.values);
    auto leq = kernels::pointwise_order(host, value_tables);
    const int m = static_cast<int>(out.members_.size());
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
      std::string s = "[";
      for (Elem a = 0; a < host.size(); ++a) {
        if (a) s += ",";
        s += host.label(out.members_[i].values[a]);
      }
      s += "]";
      labels[i] = std::move(s);
    }
    out.table_ = std::make_shared<FiniteLattice>(FiniteLattice::from_order(
        std::string(family_name(family)) + " maps on " + host.name(), labels,
        std::move(leq), m));
  }
  return out;
}

int OperatorLattice::index_of(const std::vector<Elem>& values) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), values,
      [](const Inflator& m, const std::vector<Elem>& v) { return m.values < v; });
  if (it == members_.end() || it->values != values) return -1;
  return static_cast<int>(it - members_.begin());
}

int OperatorLattice::index_of(const Inflator& d) const {
  if (d.host != host_digest_) return -1;
  return index_of(d.values);
}

int OperatorLattice::require(const Inflator& d) const {
  int i = index_of(d);
  if (i < 0)
    throw Error(Err::member_missing,
                std::string("map is not a member of the ") +
                    family_name(family_) + " family");
  return i;
}

const FiniteLattice& OperatorLattice::lattice() const {
  if (!table_)
    throw Error(Err::size_bound,
                "family exceeds the lattice cap for a materialized pointwise "
                "order");
  return *table_;
}

Inflator OperatorLattice::brute_meet(const FiniteLattice& host,
                                     const std::vector<int>& keep) const {
  if (keep.empty()) throw Error(Err::empty_family, "meet of an empty family");
  std::vector<Elem> acc = members_[keep.front()].values;
  for (size_t i = 1; i < keep.size(); ++i)
    for (Elem a = 0; a < host.size(); ++a)
      acc[a] = host.meet(acc[a], members_[keep[i]].values[a]);
  return make_inflator(host, acc);
}

Inflator OperatorLattice::brute_join(const FiniteLattice& host,
                                     const std::vector<int>& keep) const {
  if (keep.empty()) throw Error(Err::empty_family, "join of an empty family");
  std::vector<Elem> acc = members_[keep.front()].values;
  for (size_t i = 1; i < keep.size(); ++i)
    for (Elem a = 0; a < host.size(); ++a)
      acc[a] = host.join(acc[a], members_[keep[i]].values[a]);
  return make_inflator(host, acc);
}

std::optional<Inflator> OperatorLattice::least_above(
    const FiniteLattice& host, const Inflator& d) const {
  std::optional<std::vector<Elem>> acc;
  for (const auto& m : members_) {
    if (!pointwise_leq(host, d, m)) continue;
    if (!acc) {
      acc = m.values;
    } else {
      for (Elem a = 0; a < host.size(); ++a)
        (*acc)[a] = host.meet((*acc)[a], m.values[a]);
    }
  }
  if (!acc) return std::nullopt;
  // Screening with a meet only yields the least member when the fold stays in
  // the family; verify membership instead of assuming it.
  if (index_of(*acc) < 0) return std::nullopt;
  return make_inflator(host, *acc);
}

std::optional<Inflator> OperatorLattice::greatest_below(
    const FiniteLattice& host, const Inflator& d) const {
  std::optional<std::vector<Elem>> acc;
  for (const auto& m : members_) {
    if (!pointwise_leq(host, m, d)) continue;
    if (!acc) {
      acc = m.values;
    } else {
      for (Elem a = 0; a < host.size(); ++a)
        (*acc)[a] = host.join((*acc)[a], m.values[a]);
    }
  }
  if (!acc) return std::nullopt;
  if (index_of(*acc) < 0) return std::nullopt;
  return make_inflator(host, *acc);
}

OrderPredicates order_predicates(const OperatorLattice& fam,
                                 const FiniteLattice& host, int index) {
  OrderPredicates out;
  const FiniteLattice& P = fam.lattice();
  (void)host;

  // Meet-prime is the equality form: k ^ l = d forces k = d or l = d.  In a
  // finite lattice that is exactly "one upper cover": two distinct covers
  // meet to d, and with a single cover every pair above d meets above it.
  int uppers = 0;
  for (const auto& [lo, hi] : P.cover_pairs())
    if (lo == index) ++uppers;
  out.meet_prime = (uppers == 1);

  // Meet-irreducible is the stronger order form: k ^ l <= d forces k <= d or
  // l <= d.  The set {k : k not <= d} is upward closed, so it fails on some
  // pair iff it fails on the single fold of the whole set.
  bool any = false;
  Elem acc = P.top();
  for (Elem k = 0; k < P.size(); ++k)
    if (!P.leq(k, index)) {
      acc = P.meet(acc, k);
      any = true;
    }
  out.meet_irreducible = any && !P.leq(acc, index);
  return out;
}

bool essential_in_interval(const OperatorLattice& fam, int x, int lo, int hi) {
  const FiniteLattice& P = fam.lattice();
  if (!(P.leq(lo, x) && P.leq(x, hi)))
    throw Error(Err::bad_parameter, "element outside the interval");
  for (Elem y = 0; y < P.size(); ++y) {
    if (!(P.leq(lo, y) && P.leq(y, hi)) || y == lo) continue;
    if (P.meet(x, y) == lo) return false;
  }
  return true;
}

TotClassBounds tot_class_bounds(const FiniteLattice& host, const Inflator& d) {
  require_host(host, d);
  Elem b = d.values[host.bottom()];
  return TotClassBounds{u_inflator(host, b), iota_inflator(host, b)};
}

namespace {

Inflator screen_family(const FiniteLattice& host, const OperatorLattice& maps,
                       const Inflator& d, bool want_top,
                       kernels::Reduce reduce) {
  require_host(host, d);
  if (maps.family() != Family::all || maps.host_digest() != host.digest())
    throw Error(Err::bad_parameter,
                "screening needs the full map family on the same host");
  std::vector<std::vector<Elem>> tables;
  tables.reserve(maps.members().size());
  for (const auto& m : maps.members()) tables.push_back(m.values);
  auto folded =
      kernels::screened_extremum(host, tables, d.values, want_top, reduce);
  if (!folded)
    throw Error(Err::empty_family, "no member passed the screening");
  return make_inflator(host, std::move(*folded));
}

}  // namespace

Inflator brute_totalizer(const FiniteLattice& host, const OperatorLattice& maps,
                         const Inflator& d) {
  return screen_family(host, maps, d, true, kernels::Reduce::meet);
}

Inflator brute_equalizer(const FiniteLattice& host, const OperatorLattice& maps,
                         const Inflator& d) {
  return screen_family(host, maps, d, false, kernels::Reduce::join);
}

}  // namespace idiomlab
