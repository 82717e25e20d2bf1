#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frattini/limits.hpp"
#include "frattini/perm_group.hpp"

namespace frattini {

struct WitnessChecks {
  bool each_is_subgroup = false;
  bool each_is_maximal = false;
  std::optional<bool> pairwise_inconjugate;  // only when requested
  bool intersection_equals_frattini = false;
  std::uint64_t intersection_order = 0;
  // Order of Phi(parent) when it is known (from the lattice, or implied by a
  // trivial intersection of maximal subgroups).
  std::optional<std::uint64_t> frattini_order;

  bool all_pass() const noexcept {
    return each_is_subgroup && each_is_maximal && pairwise_inconjugate.value_or(true) &&
           intersection_equals_frattini;
  }
};

// An ordered family of subgroups of `parent` offered as intersecting in Phi.
struct WitnessFamily {
  PermGroup parent;
  std::vector<PermGroup> members;
  WitnessChecks checks;
};

// Checks each member for maximality in G, optionally pairwise
// non-conjugacy, and compares the intersection with Phi(G).
//
// When Phi(G) cannot be computed (|G| above the lattice bound) the comparison
// only succeeds for a trivial intersection: a trivial intersection of maximal
// subgroups forces Phi(G) = 1. Either way the family only bounds iota(G) from
// above.
//
// Throws WitnessInputError when a generator has the wrong degree or is not in
// G, and BoundExceeded when an index is beyond limits.index_bound.
WitnessFamily verify_witness_family(const PermGroup& g,
                                    const std::vector<std::vector<Permutation>>& generator_lists,
                                    bool check_inconjugacy, const Limits& limits = {});

// Intersection of all members; the members must share a degree.
PermGroup family_intersection(const std::vector<PermGroup>& members, const Limits& limits = {});

// True iff removing any single member strictly enlarges the intersection. A
// one-member family is irredundant (the empty intersection is everything).
bool is_irredundant(const std::vector<PermGroup>& family, const Limits& limits = {});

}  // namespace frattini
