#include "frattini/witness.hpp"

#include <algorithm>
#include <string>

#include "frattini/error.hpp"
#include "frattini/subgroups.hpp"

namespace frattini {

PermGroup family_intersection(const std::vector<PermGroup>& members, const Limits& limits) {
  if (members.empty()) throw DomainError("intersection of an empty family");
  PermGroup acc = members.front();
  for (std::size_t i = 1; i < members.size() && !acc.is_trivial(); ++i) {
    acc = subgroup_intersection(acc, members[i], limits);
  }
  return acc;
}

WitnessFamily verify_witness_family(const PermGroup& g,
                                    const std::vector<std::vector<Permutation>>& generator_lists,
                                    bool check_inconjugacy, const Limits& limits) {
  WitnessFamily family{g, {}, {}};
  for (std::size_t s = 0; s < generator_lists.size(); ++s) {
    for (const auto& gen : generator_lists[s]) {
      const std::string where = "subgroup " + std::to_string(s + 1) + ": generator " + gen.to_string();
      if (gen.degree() != g.degree()) {
        throw WitnessInputError(where + " has degree " + std::to_string(gen.degree()) +
                                ", expected " + std::to_string(g.degree()));
      }
      if (!g.contains(gen)) throw WitnessInputError(where + " is not in the parent group");
    }
    family.members.emplace_back(g.degree(), generator_lists[s]);
  }
  WitnessChecks& checks = family.checks;
  checks.each_is_subgroup = true;
  checks.each_is_maximal = std::all_of(family.members.begin(), family.members.end(),
                                       [&](const PermGroup& m) { return is_maximal(g, m, limits); });
  if (check_inconjugacy) {
    bool inconjugate = true;
    for (std::size_t i = 0; i < family.members.size() && inconjugate; ++i) {
      for (std::size_t j = i + 1; j < family.members.size() && inconjugate; ++j) {
        inconjugate = !are_conjugate(g, family.members[i], family.members[j], limits);
      }
    }
    checks.pairwise_inconjugate = inconjugate;
  }

  const PermGroup meet = family.members.empty() ? g : family_intersection(family.members, limits);
  checks.intersection_order = meet.order();
  if (checks.each_is_maximal && meet.is_trivial() && !family.members.empty()) {
    checks.frattini_order = 1;
    checks.intersection_equals_frattini = true;
  } else if (g.order() <= limits.lattice_bound) {
    const PermGroup phi = frattini(g, limits);
    checks.frattini_order = phi.order();
    checks.intersection_equals_frattini = meet.same_group(phi);
  }
  return family;
}

bool is_irredundant(const std::vector<PermGroup>& family, const Limits& limits) {
  if (family.size() <= 1) return true;
  const std::uint64_t whole = family_intersection(family, limits).order();
  for (std::size_t skip = 0; skip < family.size(); ++skip) {
    std::vector<PermGroup> rest;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (i != skip) rest.push_back(family[i]);
    }
    if (family_intersection(rest, limits).order() == whole) return false;
  }
  return true;
}

}  // namespace frattini
