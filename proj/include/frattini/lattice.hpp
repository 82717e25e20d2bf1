#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "frattini/element_table.hpp"

namespace frattini {

/**
 * Every subgroup of a small group, grouped into conjugacy classes.
 *
 * Built bottom-up: starting from the trivial subgroup, each class
 * representative H is joined with one element g from every N(H)-orbit of
 * right cosets Hg (the join only depends on that orbit up to conjugacy).
 * Every subgroup K > 1 is <M, g> for a maximal subgroup M of K, so the
 * worklist reaches all of them. H is maximal in G exactly when every one of
 * its joins is G, which falls out of the same pass.
 *
 * Classes are ordered by subgroup order, then by canonical representative:
 * the member whose sorted element-index list is lexicographically least.
 */
class SubgroupLattice {
 public:
  struct Class {
    ElementSet representative;
    std::vector<ElementId> generators;  // of the representative
    std::uint64_t order = 0;
    std::uint64_t normalizer_order = 0;
    bool maximal = false;
    // All conjugates; members.front() is the representative, the rest in
    // lexicographic order.
    std::vector<ElementSet> members;

    std::size_t class_size() const noexcept { return members.size(); }
  };

  SubgroupLattice(const PermGroup& group, const Limits& limits = {});

  const ElementTable& table() const noexcept { return table_; }
  const std::vector<Class>& classes() const noexcept { return classes_; }
  std::size_t subgroup_count() const noexcept { return subgroup_count_; }

  std::optional<std::size_t> class_of(const ElementSet& subgroup) const;

  // Indices into classes() of the maximal classes, ordered by index [G:M]
  // ascending, then by representative.
  std::vector<std::size_t> maximal_classes() const;
  std::size_t maximal_count() const;

  // Intersection of all maximal subgroups (the whole group if trivial).
  const ElementSet& frattini() const noexcept { return frattini_; }

 private:
  std::size_t add_class(const ElementSet& subgroup);
  void process(std::size_t class_id, const Limits& limits);

  ElementTable table_;
  std::vector<Class> classes_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> class_index_;
  std::size_t subgroup_count_ = 0;
  ElementSet frattini_;
};

}  // namespace frattini
