#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idiomlab/error.hpp"

namespace idiomlab {

using Elem = int;

struct Triple {
  Elem a, b, c;
};

inline constexpr int kDefaultMaxElements = 64;

// Finite bounded lattice over labeled elements. Immutable after construction:
// the order, meet and join tables, bounds, a structural digest and the
// modular/distributive law scans are all precomputed, so queries are O(1).
class FiniteLattice {
 public:
  // Builds from a Hasse diagram given as cover pairs (lower, upper).
  static FiniteLattice from_covers(
      std::string name, std::vector<std::string> labels,
      std::vector<std::pair<std::string, std::string>> covers,
      int max_elements = kDefaultMaxElements);

  // Builds from a full reflexive order table (row-major, leq[a*n+b]).
  static FiniteLattice from_order(std::string name,
                                  std::vector<std::string> labels,
                                  std::vector<uint8_t> leq,
                                  int max_elements = kDefaultMaxElements);

  int size() const { return n_; }
  bool leq(Elem a, Elem b) const { return leq_[a * n_ + b] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  int height(Elem a) const { return height_[a]; }

  const std::string& name() const { return name_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Elem index_of(const std::string& label) const;  // throws bad_input
  std::optional<Elem> find(const std::string& label) const;

  // Structural fingerprint: a 64-bit FNV hash of the order table after the
  // elements are put into a canonical order (sorted by height, then degree,
  // then iterated neighborhood refinement). Collisions and residual ties
  // between symmetric elements are acceptable; callers that need certainty
  // compare full order tables.
  const std::string& digest() const { return digest_; }

  bool is_modular() const { return !modular_witness_.has_value(); }
  bool is_distributive() const { return !distributive_witness_.has_value(); }
  // First triple (a,b,c) with a<=b and (a v c) ^ b != a v (c ^ b).
  const std::optional<Triple>& modular_witness() const {
    return modular_witness_;
  }
  // First triple with a ^ (b v c) != (a ^ b) v (a ^ c).
  const std::optional<Triple>& distributive_witness() const {
    return distributive_witness_;
  }

  bool covers(Elem lo, Elem hi) const;  // hi covers lo in the Hasse diagram
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;
  // Every element, sorted by (height, index); a linear extension of the order.
  std::vector<Elem> by_linear_extension() const;

  Elem meet_all(const std::vector<Elem>& xs) const;  // empty -> top
  Elem join_all(const std::vector<Elem>& xs) const;  // empty -> bottom

  const std::vector<uint8_t>& order_table() const { return leq_; }

 private:
  FiniteLattice() = default;
  void finish(int max_elements);

  std::string name_;
  std::vector<std::string> labels_;
  int n_ = 0;
  std::vector<uint8_t> leq_;
  std::vector<Elem> meet_, join_;
  std::vector<int> height_;
  Elem bottom_ = 0, top_ = 0;
  std::string digest_;
  std::optional<Triple> modular_witness_, distributive_witness_;
};

// Built-in families.
FiniteLattice make_chain(int n, int max_elements = kDefaultMaxElements);
FiniteLattice make_boolean(int atoms, int max_elements = kDefaultMaxElements);
FiniteLattice make_diamond_m3();
FiniteLattice make_pentagon_n5();
FiniteLattice make_product(const FiniteLattice& a, const FiniteLattice& b,
                           int max_elements = kDefaultMaxElements);
FiniteLattice make_interval_sublattice(const FiniteLattice& host, Elem lo,
                                       Elem hi,
                                       int max_elements = kDefaultMaxElements);

// Family expressions: chain(3), boolean(2), diamond_m3, pentagon_n5,
// product(chain(2),chain(3)), interval_sublattice(chain(5),1,3).
// Numeric arguments of interval_sublattice are element indices.
FiniteLattice generate_family(const std::string& expr,
                              int max_elements = kDefaultMaxElements);

// Seeded generator of small modular lattices: a random meet/join-closed
// subset of a random product of modular blocks. Deterministic per seed.
FiniteLattice random_modular_lattice(uint64_t seed, int max_size = 8);

}  // namespace idiomlab
