#include "frattini/subgroups.hpp"

#include <string>

#include "frattini/error.hpp"
#include "frattini/numtheory.hpp"

namespace frattini {

SubgroupClass describe_class(const SubgroupLattice& lattice, std::size_t class_id,
                             bool materialize_members) {
  const auto& cls = lattice.classes().at(class_id);
  const ElementTable& table = lattice.table();
  SubgroupClass out{table.to_group(cls.generators), cls.order, cls.class_size(),
                    cls.normalizer_order, cls.maximal, {}};
  if (materialize_members) {
    for (const auto& m : cls.members) out.members.push_back(table.to_group(m));
  }
  return out;
}

std::vector<SubgroupClass> all_subgroups(const PermGroup& g, const Limits& limits) {
  SubgroupLattice lattice(g, limits);
  std::vector<SubgroupClass> out;
  for (std::size_t c = 0; c < lattice.classes().size(); ++c) out.push_back(describe_class(lattice, c));
  return out;
}

MaximalSet maximal_subgroups(const PermGroup& g, const Limits& limits, bool materialize_members) {
  SubgroupLattice lattice(g, limits);
  MaximalSet out{g, {}, lattice.maximal_count(), lattice.frattini().count()};
  for (std::size_t c : lattice.maximal_classes()) {
    out.classes.push_back(describe_class(lattice, c, materialize_members));
  }
  return out;
}

PermGroup frattini(const PermGroup& g, const Limits& limits) {
  SubgroupLattice lattice(g, limits);
  return lattice.table().to_group(lattice.frattini());
}

bool is_maximal(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  if (g.degree() != h.degree()) throw DomainError("degree mismatch in is_maximal");
  if (!h.is_subgroup_of(g)) throw DomainError("H is not a subgroup of G");
  if (h.order() == g.order()) return false;
  if (numtheory::is_prime(g.order() / h.order())) return true;
  RightCosetSpace space(g, h, limits);
  const std::size_t own = space.index_of(Permutation(g.degree()));
  for (std::size_t c : space.double_coset_reps()) {
    if (c == own) continue;
    limits.check_deadline("maximality test");
    std::vector<Permutation> gens = h.generators();
    gens.push_back(space.rep(c));
    if (PermGroup(g.degree(), std::move(gens)).order() != g.order()) return false;
  }
  return true;
}

namespace {

PermGroup group_from_elements(std::size_t degree, const std::vector<Permutation>& elements) {
  PermGroup cur(degree);
  std::vector<Permutation> gens;
  for (const auto& x : elements) {
    if (cur.order() == elements.size()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = PermGroup(degree, gens);
  }
  if (cur.order() != elements.size()) throw Error("element set is not closed under products");
  return cur;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace

PermGroup subgroup_intersection(const PermGroup& h, const PermGroup& k, const Limits& limits) {
  if (h.degree() != k.degree()) throw DomainError("degree mismatch in subgroup_intersection");
  const PermGroup& small = h.order() <= k.order() ? h : k;
  const PermGroup& large = h.order() <= k.order() ? k : h;
  if (small.is_subgroup_of(large)) return small;
  std::vector<Permutation> common;
  for (auto& x : small.elements(limits)) {
    if (large.contains(x)) common.push_back(std::move(x));
  }
  return group_from_elements(h.degree(), common);
}

bool are_conjugate(const PermGroup& g, const PermGroup& h, const PermGroup& k, const Limits& limits) {
  if (g.degree() != h.degree() || g.degree() != k.degree()) {
    throw DomainError("degree mismatch in are_conjugate");
  }
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) throw DomainError("H and K must be subgroups of G");
  if (h.order() != k.order()) return false;
  if (h.same_group(k)) return true;
  auto maps_onto = [&](const Permutation& x) {
    for (const auto& gen : h.generators()) {
      if (!k.contains(gen.conjugated_by(x))) return false;
    }
    return true;
  };
  // x^-1 H x only depends on the right coset Hx.
  if (g.order() / h.order() <= limits.index_bound) {
    RightCosetSpace space(g, h, limits);
    for (std::size_t c = 0; c < space.size(); ++c) {
      if (maps_onto(space.rep(c))) return true;
    }
    return false;
  }
  for (const auto& x : g.elements(limits)) {
    if (maps_onto(x)) return true;
  }
  return false;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seed) {
  std::vector<Permutation> gens;
  PermGroup cur(g.degree());
  for (const auto& x : seed) {
    if (!cur.contains(x)) {
      gens.push_back(x);
      cur = PermGroup(g.degree(), gens);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
      for (const auto& t : g.generators()) {
        Permutation c = gens[i].conjugated_by(t);
        if (!cur.contains(c)) {
          gens.push_back(std::move(c));
          cur = PermGroup(g.degree(), gens);
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const Limits& limits) {
  if (!numtheory::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) {
    throw DomainError(std::to_string(p) + " does not divide the group order " + std::to_string(g.order()));
  }
  const std::uint64_t target = numtheory::p_part(g.order(), p);
  std::vector<Permutation> p_elements;
  for (auto& x : g.elements(limits)) {
    if (numtheory::is_power_of(x.order(), p) && !x.is_identity()) p_elements.push_back(std::move(x));
  }
  // Ascend: a non-Sylow p-subgroup P has some x in N(P) \ P with x^p in P.
  PermGroup sylow(g.degree());
  std::vector<Permutation> gens;
  while (sylow.order() < target) {
    limits.check_deadline("Sylow subgroup search");
    bool grown = false;
    for (const auto& x : p_elements) {
      if (sylow.contains(x) || !sylow.contains(x.pow(static_cast<long long>(p)))) continue;
      bool normalizes = true;
      for (const auto& s : gens) {
        if (!sylow.contains(s.conjugated_by(x))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      gens.push_back(x);
      sylow = PermGroup(g.degree(), gens);
      grown = true;
      break;
    }
    if (!grown) throw Error("Sylow ascent stalled");  // impossible by Sylow's theorems
  }
  return sylow;
}

unsigned p_rank(const PermGroup& p_group, const Limits& limits) {
  const std::uint64_t order = p_group.order();
  if (!numtheory::is_prime_power(order)) throw DomainError("p_rank needs a nontrivial p-group");
  const std::uint64_t p = numtheory::factorize(order).front().first;

  std::vector<Permutation> seed;
  for (const auto& x : p_group.elements(limits)) {
    Permutation power = x.pow(static_cast<long long>(p));
    if (!power.is_identity()) seed.push_back(std::move(power));
  }
  const auto& gens = p_group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) seed.push_back(commutator(gens[i], gens[j]));
  }
  const PermGroup phi = normal_closure(p_group, seed);
  std::uint64_t quotient = order / phi.order();
  unsigned rank = 0;
  while (quotient > 1) {
    quotient /= p;
    ++rank;
  }
  return rank;
}

bool is_nilpotent(const PermGroup& g, const Limits& limits) {
  if (g.order() > limits.enumeration_bound) {
    throw BoundExceeded("group order exceeds the enumeration bound");
  }
  for (std::uint64_t p : numtheory::prime_divisors(g.order())) {
    if (!g.normalizes(sylow_subgroup(g, p, limits))) return false;
  }
  return true;
}

}  // namespace frattini
