#include "frattini/invariants.hpp"

#include <algorithm>
#include <string>

#include "frattini/catalog.hpp"
#include "frattini/error.hpp"
#include "frattini/lattice.hpp"
#include "frattini/numtheory.hpp"
#include "frattini/subgroups.hpp"

namespace frattini {

namespace {

struct Candidate {
  ElementSet set;
  std::size_t cls = 0;  // position among the maximal classes
  std::uint64_t index = 0;
};

class FamilySearch {
 public:
  FamilySearch(const SubgroupLattice& lattice, bool inconjugate, const Limits& limits)
      : inconjugate_(inconjugate), limits_(limits), frattini_order_(lattice.frattini().count()) {
    const auto maximal = lattice.maximal_classes();
    const std::uint64_t n = lattice.table().size();
    for (std::size_t c = 0; c < maximal.size(); ++c) {
      class_start_.push_back(candidates_.size());
      const auto& cls = lattice.classes()[maximal[c]];
      for (const auto& m : cls.members) candidates_.push_back({m, c, n / cls.order});
    }
    class_start_.push_back(candidates_.size());
    suffix_max_index_.assign(candidates_.size() + 1, 1);
    for (std::size_t i = candidates_.size(); i-- > 0;) {
      suffix_max_index_[i] = std::max(suffix_max_index_[i + 1], candidates_[i].index);
    }
  }

  std::size_t class_count() const noexcept { return class_start_.size() - 1; }
  std::size_t candidate_count() const noexcept { return candidates_.size(); }
  std::uint64_t examined() const noexcept { return examined_; }
  const std::vector<std::size_t>& chosen() const noexcept { return chosen_; }
  const Candidate& candidate(std::size_t i) const { return candidates_[i]; }

  bool run(std::size_t size) {
    size_ = size;
    for (std::size_t c = 0; c < class_count(); ++c) {
      const std::size_t first = class_start_[c];
      chosen_.assign(1, first);
      ++examined_;
      const ElementSet& start = candidates_[first].set;
      if (!within_reach(start.count(), size - 1, first + 1)) continue;
      if (size == 1) {
        if (start.count() == frattini_order_) return true;
        continue;
      }
      if (extend(start, 1, next_start(first))) return true;
    }
    chosen_.clear();
    return false;
  }

 private:
  std::size_t next_start(std::size_t pos) const {
    return inconjugate_ ? class_start_[candidates_[pos].cls + 1] : pos + 1;
  }

  // Can `open` more members, drawn from position `from` on, bring an
  // intersection of this order down to |Phi|?
  bool within_reach(std::uint64_t order, std::size_t open, std::size_t from) const {
    std::uint64_t reachable = frattini_order_;
    const std::uint64_t step = suffix_max_index_[std::min(from, candidates_.size())];
    for (std::size_t r = 0; r < open && reachable < order; ++r) reachable *= step;
    return order <= reachable;
  }

  bool extend(const ElementSet& current, std::size_t depth, std::size_t start) {
    const std::size_t have = current.count();
    for (std::size_t i = start; i < candidates_.size(); ++i) {
      if ((++examined_ & 0xfff) == 0) limits_.check_deadline("intersection-number search");
      const std::size_t meet = current.intersection_count(candidates_[i].set);
      if (meet == have) continue;
      if (!within_reach(meet, size_ - depth - 1, i + 1)) continue;
      chosen_.push_back(i);
      if (depth + 1 == size_) {
        if (meet == frattini_order_) return true;
      } else if (meet > frattini_order_ && extend(current & candidates_[i].set, depth + 1, next_start(i))) {
        return true;
      }
      chosen_.pop_back();
    }
    return false;
  }

  bool inconjugate_;
  const Limits& limits_;
  std::uint64_t frattini_order_;
  std::vector<Candidate> candidates_;
  std::vector<std::size_t> class_start_;
  std::vector<std::uint64_t> suffix_max_index_;
  std::vector<std::size_t> chosen_;
  std::size_t size_ = 0;
  std::uint64_t examined_ = 0;
};

InvariantResult search(const PermGroup& g, InvariantKind kind, const Limits& limits) {
  if (g.is_trivial()) throw DomainError("the trivial group has no maximal subgroups");
  SubgroupLattice lattice(g, limits);
  const bool inconjugate = kind == InvariantKind::iota_hat;
  FamilySearch search(lattice, inconjugate, limits);

  InvariantResult result;
  result.kind = kind;
  result.certificate.maximal_count = search.candidate_count();
  result.certificate.maximal_class_count = search.class_count();
  result.certificate.frattini_order = lattice.frattini().count();

  const std::size_t largest = inconjugate ? search.class_count() : search.candidate_count();
  for (std::size_t size = 1; size <= largest; ++size) {
    if (!search.run(size)) {
      result.certificate.exhausted_sizes.push_back(size);
      continue;
    }
    WitnessFamily family{g, {}, {}};
    std::vector<std::size_t> classes;
    for (std::size_t pos : search.chosen()) {
      family.members.push_back(lattice.table().to_group(search.candidate(pos).set));
      classes.push_back(search.candidate(pos).cls);
    }
    std::sort(classes.begin(), classes.end());
    family.checks.each_is_subgroup = true;
    family.checks.each_is_maximal = true;
    family.checks.pairwise_inconjugate = std::adjacent_find(classes.begin(), classes.end()) == classes.end();
    family.checks.intersection_order = result.certificate.frattini_order;
    family.checks.frattini_order = result.certificate.frattini_order;
    family.checks.intersection_equals_frattini = true;
    result.value = InvariantValue::finite(size);
    result.witness = std::move(family);
    break;
  }
  if (!result.witness) result.value = InvariantValue::infinity();
  result.certificate.families_examined = search.examined();
  return result;
}

std::uint64_t dihedral_type_formula(std::uint64_t n) {
  if (numtheory::is_power_of(n, 2)) return 2;
  return numtheory::distinct_prime_count(n) + 1;
}

}  // namespace

InvariantResult iota_exact(const PermGroup& g, const Limits& limits) {
  return search(g, InvariantKind::iota, limits);
}

InvariantResult iota_hat_exact(const PermGroup& g, const Limits& limits) {
  return search(g, InvariantKind::iota_hat, limits);
}

std::uint64_t iota_nilpotent_formula(const PermGroup& g, const Limits& limits) {
  if (g.is_trivial()) throw DomainError("the trivial group has no maximal subgroups");
  if (!is_nilpotent(g, limits)) throw DomainError("group is not nilpotent");
  std::uint64_t total = 0;
  for (std::uint64_t p : numtheory::prime_divisors(g.order())) {
    total += p_rank(sylow_subgroup(g, p, limits), limits);
  }
  return total;
}

std::uint64_t iota_dihedral_formula(std::uint64_t n) {
  if (n < 3) throw DomainError("dihedral formula needs n >= 3");
  return dihedral_type_formula(n);
}

std::uint64_t iota_dicyclic_formula(std::uint64_t n) {
  if (n < 2) throw DomainError("dicyclic formula needs n >= 2");
  return dihedral_type_formula(n);
}

std::uint64_t iota_hat_dihedral_formula(std::uint64_t n) {
  if (n < 3) throw DomainError("dihedral formula needs n >= 3");
  return dihedral_type_formula(n);
}

FrobeniusInvariants frobenius_invariants(std::uint64_t p) {
  if (p < 5 || !numtheory::is_prime(p)) throw DomainError("Frobenius invariants need a prime p >= 5");
  if (!numtheory::is_squarefree(p - 1)) return {2, InvariantValue::infinity()};
  return {2, InvariantValue::finite(numtheory::distinct_prime_count(p - 1) + 1)};
}

std::uint64_t symmetric_upper_bound(std::uint64_t n) {
  if (n < 4) throw DomainError("symmetric bound needs n >= 4");
  return (n + 8) / 4;
}

ProductBound product_bound_check(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  ProductBound out;
  out.lhs = iota_exact(catalog::direct_product(g, h), limits).value.value;
  out.rhs = iota_exact(g, limits).value.value + iota_exact(h, limits).value.value;
  out.holds = out.lhs <= out.rhs;
  return out;
}

QuotientInvariance quotient_invariance_check(const PermGroup& g, const PermGroup& n, const Limits& limits) {
  if (n.degree() != g.degree() || !n.is_subgroup_of(g)) throw PreconditionFailed("N is not a subgroup of G");
  if (!g.normalizes(n)) throw PreconditionFailed("N is not normal in G");
  if (!n.is_subgroup_of(frattini(g, limits))) throw PreconditionFailed("N is not contained in Phi(G)");
  QuotientInvariance out;
  out.iota_group = iota_exact(g, limits).value.value;
  out.iota_quotient = iota_exact(coset_action(g, n, limits), limits).value.value;
  out.holds = out.iota_group == out.iota_quotient;
  return out;
}

}  // namespace frattini
