#include "idiomlab/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "idiomlab/kernels.hpp"

namespace idiomlab {

namespace {

uint64_t fnv1a(const std::vector<uint8_t>& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xf];
  return s;
}

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty())
    throw Error(Err::bad_input, "a lattice needs at least one element");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(Err::bad_input, "empty element label");
    if (!seen.insert(l).second)
      throw Error(Err::bad_input, "duplicate element label: " + l);
  }
}

}  // namespace

Elem FiniteLattice::index_of(const std::string& label) const {
  auto r = find(label);
  if (!r) throw Error(Err::bad_input, "unknown element label: " + label);
  return *r;
}

std::optional<Elem> FiniteLattice::find(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool FiniteLattice::covers(Elem lo, Elem hi) const {
  if (lo == hi || !leq(lo, hi)) return false;
  for (Elem z = 0; z < n_; ++z)
    if (z != lo && z != hi && leq(lo, z) && leq(z, hi)) return false;
  return true;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (covers(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<Elem> FiniteLattice::by_linear_extension() const {
  std::vector<Elem> order(n_);
  for (int i = 0; i < n_; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    if (height_[a] != height_[b]) return height_[a] < height_[b];
    return a < b;
  });
  return order;
}

Elem FiniteLattice::meet_all(const std::vector<Elem>& xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_all(const std::vector<Elem>& xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

FiniteLattice FiniteLattice::from_covers(
    std::string name, std::vector<std::string> labels,
    std::vector<std::pair<std::string, std::string>> covers, int max_elements) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;

  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[labels[i]] = i;
  std::set<std::pair<int, int>> seen;
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end() || b == idx.end())
      throw Error(Err::bad_input, "cover names unknown element: " + lo + " < " + hi);
    if (a->second == b->second)
      throw Error(Err::not_a_poset, "self-cover on element " + lo);
    if (!seen.emplace(a->second, b->second).second)
      throw Error(Err::bad_input, "duplicate cover pair: " + lo + " < " + hi);
    leq[a->second * n + b->second] = 1;
  }
  // Reflexive-transitive closure of the cover relation.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = 1;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i * n + j] && leq[j * n + i])
        throw Error(Err::not_a_poset, "cover cycle through " + labels[i] +
                                          " and " + labels[j]);

  FiniteLattice L;
  L.name_ = std::move(name);
  L.labels_ = std::move(labels);
  L.n_ = n;
  L.leq_ = std::move(leq);
  L.finish(max_elements);
  return L;
}

FiniteLattice FiniteLattice::from_order(std::string name,
                                        std::vector<std::string> labels,
                                        std::vector<uint8_t> leq,
                                        int max_elements) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  if (leq.size() != static_cast<size_t>(n) * n)
    throw Error(Err::bad_input, "order table size mismatch");
  for (int i = 0; i < n; ++i)
    if (!leq[i * n + i])
      throw Error(Err::not_a_poset, "order not reflexive at " + labels[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i * n + j] && leq[j * n + i])
        throw Error(Err::not_a_poset,
                    "order not antisymmetric: " + labels[i] + ", " + labels[j]);
      if (leq[i * n + j])
        for (int k = 0; k < n; ++k)
          if (leq[j * n + k] && !leq[i * n + k])
            throw Error(Err::not_a_poset, "order not transitive");
    }

  FiniteLattice L;
  L.name_ = std::move(name);
  L.labels_ = std::move(labels);
  L.n_ = n;
  L.leq_ = std::move(leq);
  L.finish(max_elements);
  return L;
}

void FiniteLattice::finish(int max_elements) {
  if (n_ > max_elements)
    throw Error(Err::size_bound, "lattice has " + std::to_string(n_) +
                                     " elements, over the max_lattice_size "
                                     "cap of " +
                                     std::to_string(max_elements));
  // Height first: the extremum search below leans on it.
  height_.assign(n_, 0);
  std::vector<Elem> by_downset(n_);
  for (int i = 0; i < n_; ++i) by_downset[i] = i;
  std::vector<int> downset_size(n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem y = 0; y < n_; ++y) downset_size[a] += leq(y, a);
  std::sort(by_downset.begin(), by_downset.end(), [&](Elem a, Elem b) {
    return downset_size[a] < downset_size[b];
  });
  for (Elem x : by_downset)
    for (Elem y = 0; y < n_; ++y)
      if (y != x && leq(y, x)) height_[x] = std::max(height_[x], height_[y] + 1);

  // If a greatest lower bound exists it is the unique common lower bound of
  // maximal height; one verification pass distinguishes that from a tie.
  meet_.assign(static_cast<size_t>(n_) * n_, 0);
  join_.assign(static_cast<size_t>(n_) * n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a; b < n_; ++b) {
      Elem glb = -1, lub = -1;
      for (Elem x = 0; x < n_; ++x) {
        if (leq(x, a) && leq(x, b) && (glb < 0 || height_[x] > height_[glb]))
          glb = x;
        if (leq(a, x) && leq(b, x) && (lub < 0 || height_[x] < height_[lub]))
          lub = x;
      }
      for (Elem y = 0; y < n_; ++y) {
        if (glb >= 0 && leq(y, a) && leq(y, b) && !leq(y, glb)) glb = -1;
        if (lub >= 0 && leq(a, y) && leq(b, y) && !leq(lub, y)) lub = -1;
      }
      if (glb < 0)
        throw Error(Err::not_a_lattice, "elements " + labels_[a] + " and " +
                                            labels_[b] + " have no meet");
      if (lub < 0)
        throw Error(Err::not_a_lattice, "elements " + labels_[a] + " and " +
                                            labels_[b] + " have no join");
      meet_[a * n_ + b] = meet_[b * n_ + a] = glb;
      join_[a * n_ + b] = join_[b * n_ + a] = lub;
    }

  bottom_ = -1;
  top_ = -1;
  for (Elem x = 0; x < n_; ++x) {
    bool lo = true, hi = true;
    for (Elem y = 0; y < n_; ++y) {
      if (!leq(x, y)) lo = false;
      if (!leq(y, x)) hi = false;
    }
    if (lo) bottom_ = x;
    if (hi) top_ = x;
  }
  if (bottom_ < 0 || top_ < 0)
    throw Error(Err::no_bounds, "lattice lacks a global bottom or top");

  // Canonical order for the digest: color by (height, degree), then refine a
  // few rounds by the multiset of neighbor colors above and below.
  {
    std::vector<int> updeg(n_, 0), downdeg(n_, 0);
    for (auto [a, b] : cover_pairs()) {
      ++updeg[a];
      ++downdeg[b];
    }
    std::vector<long long> color(n_);
    for (int i = 0; i < n_; ++i)
      color[i] = (static_cast<long long>(height_[i]) << 16) | (updeg[i] << 8) |
                 downdeg[i];
    for (int round = 0; round < 4; ++round) {
      std::vector<std::pair<std::vector<long long>, int>> sig(n_);
      for (int i = 0; i < n_; ++i) {
        std::vector<long long> s;
        s.push_back(color[i]);
        std::vector<long long> up, dn;
        for (int j = 0; j < n_; ++j) {
          if (j == i) continue;
          if (leq(i, j)) up.push_back(color[j]);
          if (leq(j, i)) dn.push_back(color[j]);
        }
        std::sort(up.begin(), up.end());
        std::sort(dn.begin(), dn.end());
        s.push_back(-1);
        s.insert(s.end(), up.begin(), up.end());
        s.push_back(-2);
        s.insert(s.end(), dn.begin(), dn.end());
        sig[i] = {std::move(s), i};
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      for (int rank = 0; rank < n_; ++rank) {
        int who = sorted[rank].second;
        long long c = rank;
        if (rank > 0 && sorted[rank].first == sorted[rank - 1].first)
          c = color[sorted[rank - 1].second];
        color[who] = c;
      }
    }
    std::vector<Elem> perm(n_);
    for (int i = 0; i < n_; ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](Elem a, Elem b) { return color[a] < color[b]; });
    std::vector<uint8_t> bytes;
    bytes.push_back(static_cast<uint8_t>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        bytes.push_back(leq(perm[i], perm[j]) ? 1 : 0);
    digest_ = hex64(fnv1a(bytes));
  }

  modular_witness_ = kernels::modular_violation(*this);
  distributive_witness_ = kernels::distributive_violation(*this);
}

// --- generators ----------------------------------------------------------------

FiniteLattice make_chain(int n, int max_elements) {
  if (n < 1) throw Error(Err::bad_parameter, "chain needs at least one element");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i * n + j] = 1;
  return FiniteLattice::from_order("chain(" + std::to_string(n) + ")",
                                   std::move(labels), std::move(leq),
                                   max_elements);
}

FiniteLattice make_boolean(int atoms, int max_elements) {
  if (atoms < 1 || atoms > 16)
    throw Error(Err::bad_parameter, "boolean atom count out of range");
  const int n = 1 << atoms;
  std::vector<std::string> labels(n);
  for (int m = 0; m < n; ++m) {
    std::string l;
    for (int i = 0; i < atoms; ++i)
      if (m & (1 << i)) l.push_back(static_cast<char>('a' + i));
    labels[m] = l.empty() ? "0" : l;
  }
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i * n + j] = ((i & j) == i) ? 1 : 0;
  return FiniteLattice::from_order("boolean(" + std::to_string(atoms) + ")",
                                   std::move(labels), std::move(leq),
                                   max_elements);
}

FiniteLattice make_diamond_m3() {
  return FiniteLattice::from_covers(
      "diamond_m3", {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

FiniteLattice make_pentagon_n5() {
  return FiniteLattice::from_covers(
      "pentagon_n5", {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"x", "z"}, {"z", "1"}, {"0", "y"}, {"y", "1"}});
}

FiniteLattice make_product(const FiniteLattice& a, const FiniteLattice& b,
                           int max_elements) {
  const int na = a.size(), nb = b.size();
  const long long n = static_cast<long long>(na) * nb;
  if (n > max_elements)
    throw Error(Err::size_bound, "product has " + std::to_string(n) +
                                     " elements, cap is " +
                                     std::to_string(max_elements));
  std::vector<std::string> labels(n);
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      labels[i * nb + j] = "(" + a.label(i) + "," + b.label(j) + ")";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[i * n + j] =
          (a.leq(i / nb, j / nb) && b.leq(i % nb, j % nb)) ? 1 : 0;
  return FiniteLattice::from_order(
      "product(" + a.name() + "," + b.name() + ")", std::move(labels),
      std::move(leq), max_elements);
}

FiniteLattice make_interval_sublattice(const FiniteLattice& host, Elem lo,
                                       Elem hi, int max_elements) {
  if (lo < 0 || hi >= host.size() || !host.leq(lo, hi))
    throw Error(Err::bad_parameter, "interval bounds must satisfy lo <= hi");
  std::vector<Elem> keep;
  for (Elem x = 0; x < host.size(); ++x)
    if (host.leq(lo, x) && host.leq(x, hi)) keep.push_back(x);
  const int n = static_cast<int>(keep.size());
  std::vector<std::string> labels(n);
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    labels[i] = host.label(keep[i]);
    for (int j = 0; j < n; ++j) leq[i * n + j] = host.leq(keep[i], keep[j]);
  }
  return FiniteLattice::from_order(
      "interval(" + host.name() + "," + host.label(lo) + "," + host.label(hi) +
          ")",
      std::move(labels), std::move(leq), max_elements);
}

// --- family expressions -----------------------------------------------------------

namespace {

struct FamilyParser {
  const std::string& s;
  size_t pos = 0;
  int max_elements;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos)
      throw Error(Err::bad_parameter, "expected a family name in: " + s);
    return s.substr(start, pos - start);
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos)
      throw Error(Err::bad_parameter, "expected an integer in: " + s);
    return std::stoi(s.substr(start, pos - start));
  }

  FiniteLattice expr() {
    std::string name = ident();
    if (name == "chain") {
      require('(');
      int n = integer();
      require(')');
      return make_chain(n, max_elements);
    }
    if (name == "boolean") {
      require('(');
      int n = integer();
      require(')');
      return make_boolean(n, max_elements);
    }
    if (name == "diamond_m3" || name == "m3") return make_diamond_m3();
    if (name == "pentagon_n5" || name == "n5") return make_pentagon_n5();
    if (name == "product") {
      require('(');
      FiniteLattice a = expr();
      require(',');
      FiniteLattice b = expr();
      require(')');
      return make_product(a, b, max_elements);
    }
    if (name == "interval_sublattice" || name == "interval") {
      require('(');
      FiniteLattice host = expr();
      require(',');
      int lo = integer();
      require(',');
      int hi = integer();
      require(')');
      return make_interval_sublattice(host, lo, hi, max_elements);
    }
    throw Error(Err::bad_parameter, "unknown family: " + name);
  }

  void require(char c) {
    if (!eat(c))
      throw Error(Err::bad_parameter,
                  std::string("expected '") + c + "' in family expression: " + s);
  }
};

}  // namespace

FiniteLattice generate_family(const std::string& expr, int max_elements) {
  FamilyParser p{expr, 0, max_elements};
  FiniteLattice L = p.expr();
  p.skip_ws();
  if (p.pos != expr.size())
    throw Error(Err::bad_parameter,
                "trailing input in family expression: " + expr);
  return L;
}

// --- random modular lattices ----------------------------------------------------

FiniteLattice random_modular_lattice(uint64_t seed, int max_size) {
  if (max_size < 2)
    throw Error(Err::bad_parameter, "random lattice size cap too small");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int attempt = 0; attempt < 256; ++attempt) {
    // A random product of modular blocks; any meet/join-closed subset of it
    // is again modular.
    FiniteLattice host = make_chain(2);
    int blocks = 1 + static_cast<int>(rng() % 2);
    for (int b = 0; b < blocks; ++b) {
      int pick = static_cast<int>(rng() % 5);
      FiniteLattice block = pick == 0   ? make_chain(2)
                            : pick == 1 ? make_chain(3)
                            : pick == 2 ? make_chain(4)
                            : pick == 3 ? make_boolean(2)
                                        : make_diamond_m3();
      if (static_cast<long long>(host.size()) * block.size() > 40) break;
      host = make_product(host, block);
    }
    const int n = host.size();
    std::set<Elem> sub{host.bottom(), host.top()};
    int extra = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < extra; ++i) sub.insert(static_cast<Elem>(rng() % n));
    bool grew = true;
    while (grew && static_cast<int>(sub.size()) <= max_size) {
      grew = false;
      std::vector<Elem> cur(sub.begin(), sub.end());
      for (Elem x : cur)
        for (Elem y : cur) {
          if (sub.insert(host.meet(x, y)).second) grew = true;
          if (sub.insert(host.join(x, y)).second) grew = true;
        }
    }
    if (static_cast<int>(sub.size()) > max_size) continue;
    std::vector<Elem> keep(sub.begin(), sub.end());
    const int m = static_cast<int>(keep.size());
    std::vector<std::string> labels(m);
    std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
      labels[i] = host.label(keep[i]);
      for (int j = 0; j < m; ++j) leq[i * m + j] = host.leq(keep[i], keep[j]);
    }
    return FiniteLattice::from_order("random-" + std::to_string(seed),
                                     std::move(labels), std::move(leq));
  }
  return make_chain(2);
}

}  // namespace idiomlab
