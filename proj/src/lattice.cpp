#include "frattini/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "frattini/error.hpp"

namespace frattini {

SubgroupLattice::SubgroupLattice(const PermGroup& group, const Limits& limits)
    : table_(group, limits) {
  ElementSet trivial = table_.empty_set();
  trivial.set(0);
  add_class(trivial);
  for (std::size_t c = 0; c < classes_.size(); ++c) process(c, limits);

  // Canonical order: by subgroup order, then representative.
  std::vector<std::size_t> perm(classes_.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (classes_[a].order != classes_[b].order) return classes_[a].order < classes_[b].order;
    return classes_[a].representative.lex_less(classes_[b].representative);
  });
  std::vector<Class> sorted;
  sorted.reserve(classes_.size());
  for (std::size_t i : perm) sorted.push_back(std::move(classes_[i]));
  classes_ = std::move(sorted);
  class_index_.clear();
  subgroup_count_ = 0;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (const auto& m : classes_[c].members) class_index_.emplace(m, c);
    subgroup_count_ += classes_[c].members.size();
  }

  frattini_ = table_.full_set();
  for (const auto& cls : classes_) {
    if (!cls.maximal) continue;
    for (const auto& m : cls.members) frattini_ &= m;
  }
}

std::size_t SubgroupLattice::add_class(const ElementSet& subgroup) {
  const std::size_t id = classes_.size();
  Class cls;
  cls.order = subgroup.count();
  cls.members.push_back(subgroup);
  class_index_.emplace(subgroup, id);
  for (std::size_t i = 0; i < cls.members.size(); ++i) {
    for (ElementId x : table_.generator_ids()) {
      ElementSet next = table_.conjugate(cls.members[i], x);
      if (class_index_.emplace(next, id).second) cls.members.push_back(std::move(next));
    }
  }
  std::sort(cls.members.begin(), cls.members.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.lex_less(b); });
  cls.representative = cls.members.front();
  cls.generators = table_.greedy_generators(cls.representative);
  classes_.push_back(std::move(cls));
  return id;
}

void SubgroupLattice::process(std::size_t class_id, const Limits& limits) {
  limits.check_deadline("subgroup lattice construction");
  const std::size_t n = table_.size();
  const ElementSet h = classes_[class_id].representative;
  const std::vector<ElementId> h_gens = classes_[class_id].generators;
  const std::vector<ElementId> h_elems = h.indices();

  const ElementSet normalizer = table_.normalizer(h, h_gens);
  const std::uint64_t normalizer_order = normalizer.count();
  if (n / normalizer_order != classes_[class_id].members.size()) {
    throw Error("conjugacy class size disagrees with the normalizer index");
  }
  const std::vector<ElementId> n_gens = table_.greedy_generators(normalizer);

  bool every_join_is_whole_group = true;
  ElementSet done = h;
  std::vector<ElementId> queue;
  for (std::size_t g = 0; g < n; ++g) {
    if (done.test(static_cast<ElementId>(g))) continue;
    const ElementSet k = table_.join(h, h_elems, h_gens, static_cast<ElementId>(g));
    if (k.count() != n) every_join_is_whole_group = false;
    if (!class_index_.count(k)) add_class(k);

    // Mark the N(H)-orbit of the coset Hg; every coset in it yields a
    // conjugate of k.
    queue.clear();
    for (ElementId e : h_elems) {
      const ElementId y = table_.mul(e, static_cast<ElementId>(g));
      done.set(y);
      queue.push_back(y);
    }
    while (!queue.empty()) {
      const ElementId e = queue.back();
      queue.pop_back();
      for (ElementId t : n_gens) {
        const ElementId f = table_.conj(e, t);
        if (!done.test(f)) {
          done.set(f);
          queue.push_back(f);
        }
      }
    }
  }

  Class& cls = classes_[class_id];
  cls.normalizer_order = normalizer_order;
  cls.maximal = cls.order < n && every_join_is_whole_group;
}

std::optional<std::size_t> SubgroupLattice::class_of(const ElementSet& subgroup) const {
  auto it = class_index_.find(subgroup);
  if (it == class_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SubgroupLattice::maximal_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = classes_.size(); c-- > 0;) {
    if (classes_[c].maximal) out.push_back(c);
  }
  // classes_ is sorted by ascending order, so walking backwards gives
  // descending order (ascending index); restore the representative tiebreak.
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    if (classes_[a].order != classes_[b].order) return classes_[a].order > classes_[b].order;
    return classes_[a].representative.lex_less(classes_[b].representative);
  });
  return out;
}

std::size_t SubgroupLattice::maximal_count() const {
  std::size_t total = 0;
  for (const auto& cls : classes_) {
    if (cls.maximal) total += cls.members.size();
  }
  return total;
}

}  // namespace frattini
