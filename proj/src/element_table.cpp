#include "frattini/element_table.hpp"

#include <string>

#include "frattini/error.hpp"

namespace frattini {

namespace {

// Column-major uint16 table; 8192^2 entries is 128 MiB.
constexpr std::uint64_t kMaxTableOrder = 8192;

}  // namespace

ElementTable::ElementTable(const PermGroup& group, const Limits& limits) : group_(group) {
  const std::uint64_t n = group.order();
  if (n > limits.lattice_bound) {
    throw BoundExceeded("group order " + std::to_string(n) + " exceeds the lattice bound " +
                        std::to_string(limits.lattice_bound) +
                        "; use witness verification for larger groups");
  }
  if (n > kMaxTableOrder) {
    throw BoundExceeded("group order " + std::to_string(n) +
                        " exceeds the multiplication-table cap " + std::to_string(kMaxTableOrder));
  }
  Limits enumerate = limits;
  enumerate.enumeration_bound = n;
  elements_ = group.elements(enumerate);
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<ElementId>(i));

  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    if (!g.is_identity()) gens.push_back(g);
  }
  for (const auto& g : gens) generator_ids_.push_back(index_of(g));

  // Right multiplication by each generator.
  std::vector<std::vector<ElementId>> columns(gens.size(), std::vector<ElementId>(n));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) columns[k][i] = index_of(elements_[i] * gens[k]);
  }

  // Spanning tree of the Cayley graph: element j = element parent[j] * gens[via[j]].
  std::vector<ElementId> order_bfs{0};
  std::vector<ElementId> parent(n, 0);
  std::vector<std::uint32_t> via(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t q = 0; q < order_bfs.size(); ++q) {
    ElementId x = order_bfs[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ElementId y = columns[k][x];
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      via[y] = static_cast<std::uint32_t>(k);
      order_bfs.push_back(y);
    }
  }
  if (order_bfs.size() != n) throw Error("Cayley graph traversal did not reach every element");

  table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) table_[i] = static_cast<std::uint16_t>(i);
  for (std::size_t q = 1; q < n; ++q) {
    const ElementId j = order_bfs[q];
    const std::uint16_t* src = &table_[static_cast<std::size_t>(parent[j]) * n];
    std::uint16_t* dst = &table_[static_cast<std::size_t>(j) * n];
    const auto& col = columns[via[j]];
    for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint16_t>(col[src[i]]);
  }

  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }
}

ElementId ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw DomainError("permutation " + p.to_string() + " is not in the group");
  return it->second;
}

ElementSet ElementTable::full_set() const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i) s.set(static_cast<ElementId>(i));
  return s;
}

ElementSet ElementTable::join(const ElementSet& h, const std::vector<ElementId>& h_elements,
                              const std::vector<ElementId>& h_gens, ElementId extra) const {
  if (h.test(extra)) return h;
  const std::size_t n = size();
  ElementSet k = h;
  std::size_t count = h_elements.size();
  std::vector<ElementId> reps{0};
  auto add_coset = [&](ElementId y) {
    for (ElementId e : h_elements) k.set(mul(e, y));
    count += h_elements.size();
    reps.push_back(y);
  };
  add_coset(extra);
  if (2 * count > n) return full_set();
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const ElementId rep = reps[r];
    for (std::size_t s = 0; s <= h_gens.size(); ++s) {
      const ElementId gen = s < h_gens.size() ? h_gens[s] : extra;
      const ElementId y = mul(rep, gen);
      if (k.test(y)) continue;
      add_coset(y);
      if (2 * count > n) return full_set();
    }
  }
  return k;
}

ElementSet ElementTable::closure(const std::vector<ElementId>& gens) const {
  ElementSet cur = empty_set();
  cur.set(0);
  std::vector<ElementId> elems{0};
  std::vector<ElementId> used;
  for (ElementId g : gens) {
    if (cur.test(g)) continue;
    cur = join(cur, elems, used, g);
    used.push_back(g);
    elems = cur.indices();
  }
  return cur;
}

std::vector<ElementId> ElementTable::greedy_generators(const ElementSet& subgroup) const {
  ElementSet cur = empty_set();
  cur.set(0);
  std::vector<ElementId> elems{0};
  std::vector<ElementId> gens;
  const std::size_t target = subgroup.count();
  for (ElementId i : subgroup.indices()) {
    if (elems.size() == target) break;
    if (cur.test(i)) continue;
    cur = join(cur, elems, gens, i);
    gens.push_back(i);
    elems = cur.indices();
  }
  return gens;
}

ElementSet ElementTable::conjugate(const ElementSet& subgroup, ElementId x) const {
  ElementSet out = empty_set();
  for (ElementId e : subgroup.indices()) out.set(conj(e, x));
  return out;
}

ElementSet ElementTable::normalizer(const ElementSet& subgroup,
                                    const std::vector<ElementId>& gens) const {
  ElementSet out = empty_set();
  for (std::size_t x = 0; x < size(); ++x) {
    bool normalizes = true;
    for (ElementId g : gens) {
      if (!subgroup.test(conj(g, static_cast<ElementId>(x)))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.set(static_cast<ElementId>(x));
  }
  return out;
}

PermGroup ElementTable::to_group(const std::vector<ElementId>& gens) const {
  std::vector<Permutation> perms;
  perms.reserve(gens.size());
  for (ElementId g : gens) perms.push_back(elements_[g]);
  return PermGroup(group_.degree(), std::move(perms));
}

ElementSet ElementTable::from_group(const PermGroup& subgroup) const {
  std::vector<ElementId> gens;
  for (const auto& g : subgroup.generators()) gens.push_back(index_of(g));
  return closure(gens);
}

}  // namespace frattini
