#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "frattini/element_set.hpp"
#include "frattini/limits.hpp"
#include "frattini/perm_group.hpp"

namespace frattini {

using ElementId = std::uint32_t;

/**
 * Elements of a small group indexed in lexicographic order of their image
 * tuples (identity = 0), with a full multiplication table. Subgroups of the
 * group are then plain ElementSets and closure is table lookups.
 *
 * The table is column-major: mul(i, j) = table_[j * n + i].
 */
class ElementTable {
 public:
  // Throws BoundExceeded when order(G) > limits.lattice_bound or the table
  // would not fit the in-memory cap.
  ElementTable(const PermGroup& group, const Limits& limits);

  std::size_t size() const noexcept { return elements_.size(); }
  const PermGroup& group() const noexcept { return group_; }
  const Permutation& element(ElementId i) const { return elements_[i]; }
  ElementId index_of(const Permutation& p) const;
  bool has(const Permutation& p) const { return index_.count(p) != 0; }

  // i then j.
  ElementId mul(ElementId i, ElementId j) const noexcept {
    return table_[static_cast<std::size_t>(j) * elements_.size() + i];
  }
  ElementId inv(ElementId i) const noexcept { return inverse_[i]; }
  // x^-1 e x
  ElementId conj(ElementId e, ElementId x) const noexcept { return mul(mul(inverse_[x], e), x); }
  std::uint64_t element_order(ElementId i) const noexcept { return orders_[i]; }

  // Indices of the group's own generators.
  const std::vector<ElementId>& generator_ids() const noexcept { return generator_ids_; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const;

  // <H, extra> where H is a subgroup given by its elements and generators.
  // Stops early and returns the whole group once more than half of it is
  // reached (Lagrange).
  ElementSet join(const ElementSet& h, const std::vector<ElementId>& h_elements,
                  const std::vector<ElementId>& h_gens, ElementId extra) const;

  ElementSet closure(const std::vector<ElementId>& gens) const;

  // Deterministic small generating set: scan elements in index order and
  // keep each one not already generated.
  std::vector<ElementId> greedy_generators(const ElementSet& subgroup) const;

  ElementSet conjugate(const ElementSet& subgroup, ElementId x) const;
  ElementSet normalizer(const ElementSet& subgroup, const std::vector<ElementId>& gens) const;

  PermGroup to_group(const std::vector<ElementId>& gens) const;
  PermGroup to_group(const ElementSet& subgroup) const { return to_group(greedy_generators(subgroup)); }
  ElementSet from_group(const PermGroup& subgroup) const;

 private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<std::uint16_t> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementId> generator_ids_;
};

}  // namespace frattini
