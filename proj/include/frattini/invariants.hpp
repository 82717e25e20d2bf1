#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frattini/limits.hpp"
#include "frattini/perm_group.hpp"
#include "frattini/witness.hpp"

namespace frattini {

// A positive integer or infinity.
struct InvariantValue {
  bool infinite = false;
  std::uint64_t value = 0;

  static InvariantValue finite(std::uint64_t v) { return {false, v}; }
  static InvariantValue infinity() { return {true, 0}; }
  std::string to_string() const { return infinite ? "infinity" : std::to_string(value); }
  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

enum class InvariantKind { iota, iota_hat };

struct SearchCertificate {
  // Family sizes for which every candidate family was ruled out.
  std::vector<std::size_t> exhausted_sizes;
  std::size_t maximal_count = 0;
  std::size_t maximal_class_count = 0;
  std::uint64_t frattini_order = 0;
  std::uint64_t families_examined = 0;
};

struct InvariantResult {
  InvariantKind kind = InvariantKind::iota;
  InvariantValue value;
  std::optional<WitnessFamily> witness;
  SearchCertificate certificate;
};

// Least k such that some k maximal subgroups intersect in Phi(G).
//
// Families are tried by size, then lexicographically over the maximal
// subgroups listed class by class (index ascending, representative first).
// The first member is always a class representative: conjugating a family
// preserves whether it meets Phi(G), and some conjugate of any family has its
// earliest member in representative position. Each further member must
// strictly shrink the running intersection, and a branch is cut when even
// the largest remaining index at every open slot cannot bring the
// intersection down to |Phi(G)|, since |I cap M| >= |I| / [G:M].
//
// Requires |G| within limits.lattice_bound.
InvariantResult iota_exact(const PermGroup& g, const Limits& limits = {});

// Same search over families of pairwise non-conjugate maximal subgroups (at
// most one per class). Infinity when no such family reaches Phi(G).
InvariantResult iota_hat_exact(const PermGroup& g, const Limits& limits = {});

// Sum of the ranks of the Sylow subgroups. Throws DomainError unless G is
// nilpotent and nontrivial.
std::uint64_t iota_nilpotent_formula(const PermGroup& g, const Limits& limits = {});

// k + 1 with k = number of distinct primes of n, or 2 when n is a power of 2.
// Dihedral group of order 2n (n >= 3), dicyclic group of order 4n (n >= 2).
std::uint64_t iota_dihedral_formula(std::uint64_t n);
std::uint64_t iota_dicyclic_formula(std::uint64_t n);
std::uint64_t iota_hat_dihedral_formula(std::uint64_t n);

struct FrobeniusInvariants {
  std::uint64_t iota = 0;
  InvariantValue iota_hat;
};
// For the Frobenius group of order p(p-1), p prime >= 5: iota = 2, and
// iota-hat = k + 1 when p - 1 is squarefree with k prime factors, else
// infinity.
FrobeniusInvariants frobenius_invariants(std::uint64_t p);

// floor((n + 8) / 4), n >= 4.
std::uint64_t symmetric_upper_bound(std::uint64_t n);

struct ProductBound {
  std::uint64_t lhs = 0;  // iota(G x H)
  std::uint64_t rhs = 0;  // iota(G) + iota(H)
  bool holds = false;
};
ProductBound product_bound_check(const PermGroup& g, const PermGroup& h, const Limits& limits = {});

struct QuotientInvariance {
  std::uint64_t iota_group = 0;
  std::uint64_t iota_quotient = 0;
  bool holds = false;
};
// Throws PreconditionFailed unless N is a normal subgroup of G inside Phi(G).
QuotientInvariance quotient_invariance_check(const PermGroup& g, const PermGroup& n,
                                             const Limits& limits = {});

}  // namespace frattini
