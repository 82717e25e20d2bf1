#pragma once

#include <cstdint>
#include <vector>

#include "frattini/lattice.hpp"
#include "frattini/perm_group.hpp"

namespace frattini {

// One conjugacy class of subgroups of a parent group.
struct SubgroupClass {
  PermGroup representative;
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;
  std::uint64_t normalizer_order = 0;
  bool maximal = false;
  std::vector<PermGroup> members;  // filled only when materialized
};

struct MaximalSet {
  PermGroup parent;
  std::vector<SubgroupClass> classes;  // index ascending
  std::uint64_t total_count = 0;
  std::uint64_t frattini_order = 0;
};

SubgroupClass describe_class(const SubgroupLattice& lattice, std::size_t class_id,
                             bool materialize_members = false);

// Every subgroup of G in conjugacy classes. Requires |G| <= lattice bound.
std::vector<SubgroupClass> all_subgroups(const PermGroup& g, const Limits& limits = {});

MaximalSet maximal_subgroups(const PermGroup& g, const Limits& limits = {},
                             bool materialize_members = false);

PermGroup frattini(const PermGroup& g, const Limits& limits = {});

// Maximality of a proper subgroup H of G by closing H with one representative
// of each nontrivial double coset HgH. Works beyond the lattice bound as long
// as [G:H] <= limits.index_bound.
bool is_maximal(const PermGroup& g, const PermGroup& h, const Limits& limits = {});

// Enumerates the smaller group and keeps the elements of the larger.
PermGroup subgroup_intersection(const PermGroup& h, const PermGroup& k, const Limits& limits = {});

// True iff x^-1 H x = K for some x in G.
bool are_conjugate(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                   const Limits& limits = {});

// Smallest subgroup of G containing `seed` that is normalized by G.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seed);

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const Limits& limits = {});

// r with [P : Phi(P)] = p^r, using Phi(P) = P^p [P, P].
unsigned p_rank(const PermGroup& p_group, const Limits& limits = {});

// Every Sylow subgroup is normal.
bool is_nilpotent(const PermGroup& g, const Limits& limits = {});

}  // namespace frattini
