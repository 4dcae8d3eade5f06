#pragma once

#include <stdexcept>
#include <string>

namespace idiomlab {

// Failure kinds surfaced to callers; the CLI maps these onto exit codes.
enum class Err {
  bad_input,                    // malformed file or table
  not_a_poset,                  // cover relation has a cycle
  not_a_lattice,                // some pair lacks a meet or a join
  no_bounds,                    // missing global bottom or top
  bad_parameter,                // out-of-range argument
  host_mismatch,                // operands live on different lattices
  empty_family,                 // an operation requires a non-empty family
  enumeration_bound,            // family enumeration exceeded the configured cap
  size_bound,                   // lattice larger than the configured cap
  not_basic,                    // interval set is not closed at the required level
  not_a_nucleus,                // operand must be an idempotent meet-preserving inflator
  not_inflationary,             // value table drops below the argument somewhere
  not_monotone,                 // value table breaks order-preservation
  member_missing,               // expected member absent from an enumerated family
  not_closed_under_composition, // composition leaves the family
  route_disagreement,           // two independent computations of one value differ
  condition_lost_at_join,       // defining condition fails after a family join
  frame_violation,              // nucleus lattice failed the distributivity check
};

inline const char* err_name(Err k) {
  switch (k) {
    case Err::bad_input: return "bad_input";
    case Err::not_a_poset: return "not_a_poset";
    case Err::not_a_lattice: return "not_a_lattice";
    case Err::no_bounds: return "no_bounds";
    case Err::bad_parameter: return "bad_parameter";
    case Err::host_mismatch: return "host_mismatch";
    case Err::empty_family: return "empty_family";
    case Err::enumeration_bound: return "enumeration_bound";
    case Err::size_bound: return "size_bound";
    case Err::not_basic: return "not_basic";
    case Err::not_a_nucleus: return "not_a_nucleus";
    case Err::not_inflationary: return "not_inflationary";
    case Err::not_monotone: return "not_monotone";
    case Err::member_missing: return "member_missing";
    case Err::not_closed_under_composition: return "not_closed_under_composition";
    case Err::route_disagreement: return "route_disagreement";
    case Err::condition_lost_at_join: return "condition_lost_at_join";
    case Err::frame_violation: return "frame_violation";
  }
  return "unknown";
}

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline bool is_bound_error(Err k) {
  return k == Err::enumeration_bound || k == Err::size_bound;
}

}  // namespace idiomlab
