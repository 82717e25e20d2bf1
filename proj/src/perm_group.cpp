#include "frattini/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "frattini/error.hpp"

namespace frattini {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw BoundExceeded("group order overflows 64 bits");
  }
  return a * b;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {
  if (degree == 0) throw DomainError("group degree must be positive");
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw DomainError("group degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw DomainError("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(degree_));
    }
  }
  build_chain();
}

PermGroup PermGroup::from_generators(std::vector<Permutation> generators) {
  if (generators.empty()) throw DomainError("cannot infer degree from an empty generator list");
  std::size_t degree = generators.front().degree();
  return PermGroup(degree, std::move(generators));
}

void PermGroup::compute_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation(degree_));
  level.slot.assign(degree_, -1);
  level.slot[level.base_point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point y = level.orbit[i];
    for (const auto& s : level.strong_generators) {
      Point z = s(y);
      if (level.slot[z] >= 0) continue;
      level.slot[z] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(z);
      level.transversal.push_back(level.transversal[i] * s);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& p,
                                                    std::size_t from_level) const {
  if (p.degree() != degree_) throw DomainError("degree mismatch in membership test");
  Permutation h = p;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    Point y = h(level.base_point);
    if (level.slot[y] < 0) return {h, l};
    h = h * transversal_for(level, y).inverse();
  }
  return {h, levels_.size()};
}

void PermGroup::build_chain() {
  std::vector<Permutation> gens;
  for (const auto& g : generators_) {
    if (!g.is_identity()) gens.push_back(g);
  }

  auto fixes_base_prefix = [this](const Permutation& g, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (g(levels_[i].base_point) != levels_[i].base_point) return false;
    }
    return true;
  };

  for (const auto& g : gens) {
    if (fixes_base_prefix(g, levels_.size())) {
      Level level;
      level.base_point = g.first_moved_point();
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : gens) {
      if (fixes_base_prefix(g, l)) levels_[l].strong_generators.push_back(g);
    }
    compute_orbit(levels_[l]);
  }

  // Schreier-Sims: level i is complete once every Schreier generator of
  // G^(i) sifts to the identity through levels i+1...
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t lvl = i - 1;
    bool extended = false;
    for (std::size_t oi = 0; !extended && oi < levels_[lvl].orbit.size(); ++oi) {
      for (std::size_t si = 0; si < levels_[lvl].strong_generators.size(); ++si) {
        const Level& level = levels_[lvl];
        Point y = level.orbit[oi];
        const Permutation& s = level.strong_generators[si];
        Permutation schreier = level.transversal[oi] * s * transversal_for(level, s(y)).inverse();
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(schreier, lvl + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base_point = residue.first_moved_point();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = lvl + 1; l <= stop; ++l) {
          levels_[l].strong_generators.push_back(residue);
          compute_orbit(levels_[l]);
        }
        i = stop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const auto& level : levels_) order_ = checked_mul(order_, level.orbit.size());
}

bool PermGroup::contains(const Permutation& p) const {
  auto [residue, stop] = sift(p);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(const Limits& limits) const {
  if (order_ > limits.enumeration_bound) {
    throw BoundExceeded("group of order " + std::to_string(order_) +
                        " exceeds the enumeration bound " +
                        std::to_string(limits.enumeration_bound));
  }
  std::vector<Permutation> out{Permutation(degree_)};
  out.reserve(order_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].transversal.size());
    for (const auto& x : out) {
      for (const auto& u : levels_[l].transversal) next.push_back(x * u);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& level : levels_) b.push_back(level.base_point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& level : levels_) sizes.push_back(level.orbit.size());
  return sizes;
}

Permutation PermGroup::canonical_right_coset_rep(const Permutation& g) const {
  if (g.degree() != degree_) throw DomainError("degree mismatch in coset representative");
  Permutation cur = g;
  for (const auto& level : levels_) {
    std::size_t best = 0;
    Point best_image = cur(level.orbit[0]);
    for (std::size_t i = 1; i < level.orbit.size(); ++i) {
      Point image = cur(level.orbit[i]);
      if (image < best_image) {
        best_image = image;
        best = i;
      }
    }
    if (best != 0) cur = level.transversal[best] * cur;
  }
  return cur;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree_ != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order_ == other.order_ && is_subgroup_of(other);
}

bool PermGroup::normalizes(const PermGroup& subgroup) const {
  for (const auto& g : generators_) {
    for (const auto& h : subgroup.generators()) {
      if (!subgroup.contains(h.conjugated_by(g))) return false;
    }
  }
  return true;
}

PermGroup closure(std::size_t ambient_degree, const std::vector<Permutation>& seed) {
  return PermGroup(ambient_degree, seed);
}

PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& g) {
  if (g.degree() != h.degree()) throw DomainError("degree mismatch in conjugate_subgroup");
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(x.conjugated_by(g));
  return PermGroup(h.degree(), std::move(gens));
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& gen : g.generators()) {
        const Point y = gen(orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

RightCosetSpace::RightCosetSpace(const PermGroup& g, const PermGroup& h, const Limits& limits)
    : subgroup_(h) {
  if (g.degree() != h.degree()) throw DomainError("degree mismatch in coset enumeration");
  if (!h.is_subgroup_of(g)) throw DomainError("subgroup is not contained in the group");
  const std::uint64_t index = g.order() / h.order();
  if (index > limits.index_bound) {
    throw BoundExceeded("index " + std::to_string(index) + " exceeds the index bound " +
                        std::to_string(limits.index_bound));
  }
  reps_.push_back(h.canonical_right_coset_rep(Permutation(g.degree())));
  index_.emplace(reps_.front(), 0);
  action_.assign(g.generators().size(), {});
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    if ((c & 0xfff) == 0) limits.check_deadline("coset enumeration");
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      Permutation next = h.canonical_right_coset_rep(reps_[c] * g.generators()[k]);
      auto [it, inserted] = index_.emplace(next, reps_.size());
      if (inserted) reps_.push_back(std::move(next));
      action_[k].push_back(static_cast<std::uint32_t>(it->second));
    }
  }
  if (reps_.size() != index) throw Error("coset enumeration produced an inconsistent index");
}

std::size_t RightCosetSpace::index_of(const Permutation& x) const {
  auto it = index_.find(subgroup_.canonical_right_coset_rep(x));
  if (it == index_.end()) throw DomainError("element is outside the enumerated group");
  return it->second;
}

std::vector<std::size_t> RightCosetSpace::double_coset_reps() const {
  std::vector<bool> seen(reps_.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t start = 0; start < reps_.size(); ++start) {
    if (seen[start]) continue;
    out.push_back(start);
    seen[start] = true;
    std::vector<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t c = queue.back();
      queue.pop_back();
      for (const auto& h : subgroup_.generators()) {
        std::size_t d = act(c, h);
        if (!seen[d]) {
          seen[d] = true;
          queue.push_back(d);
        }
      }
    }
  }
  return out;
}

PermGroup coset_action(const PermGroup& g, const PermGroup& n, const Limits& limits) {
  if (!n.is_subgroup_of(g)) throw DomainError("N is not a subgroup of G");
  if (!g.normalizes(n)) throw DomainError("N is not normal in G");
  RightCosetSpace space(g, n, limits);
  std::vector<Permutation> gens;
  for (const auto& column : space.generator_action()) {
    std::vector<Point> images(column.begin(), column.end());
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermGroup(space.size(), std::move(gens));
}

}  // namespace frattini
