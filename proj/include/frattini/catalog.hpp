#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frattini/perm_group.hpp"

namespace frattini::catalog {

struct Options {
  // Accept D2, D4, Q4 and F3 (degenerate small cases outside the usual
  // hypotheses n >= 3, n >= 2, p >= 5).
  bool allow_degenerate = false;
};

PermGroup symmetric(std::uint64_t n);
PermGroup alternating(std::uint64_t n);
PermGroup cyclic(std::uint64_t n);
PermGroup elementary_abelian(std::uint64_t p, std::uint64_t r);

// Dihedral group of ORDER m = 2n on n points: r = (1..n), s: i -> n+2-i mod n.
// Generators are returned in the order (r, s).
PermGroup dihedral(std::uint64_t order, const Options& options = {});

// Dicyclic group of ORDER m = 4n, right regular representation on m points.
// Generators (x, y) satisfy x^(2n) = 1, y^2 = x^n, y^-1 x y = x^-1.
PermGroup dicyclic(std::uint64_t order, const Options& options = {});

// Frobenius group Z_p : Z_(p-1) of order p(p-1) on p points. Generators are
// x = (1..p) and y: i -> r*i mod p fixing p, r the least primitive root;
// y^-1 x y = x^r.
PermGroup frobenius(std::uint64_t p, const Options& options = {});

// Factors act on disjoint point ranges: G on 1..deg(G), H after it.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

// One factor of a group spec. `family` is one of S A Z D Q F E; `second` is
// only used by E (rank).
struct Atom {
  char family = 'Z';
  std::uint64_t first = 1;
  std::uint64_t second = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// Left-associated direct product of atoms, e.g. "A5xA5" or "E2^3xZ9".
struct GroupSpec {
  std::vector<Atom> factors;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Grammar: spec := atom | spec "x" atom
//          atom := ("S"|"A"|"Z"|"D"|"Q"|"F") integer | "E" integer "^" integer
// Whitespace is ignored and letters are case-insensitive. D and Q take the
// group ORDER: "D12" is the dihedral group of order 12.
GroupSpec parse_group_spec(std::string_view text);

// Canonical spelling: upper-case family letters, lower-case "x".
std::string to_string(const GroupSpec& spec);

// Throws DomainError when an atom violates its parameter constraints.
void validate(const GroupSpec& spec, const Options& options = {});

PermGroup build(const GroupSpec& spec, const Options& options = {});
PermGroup build(std::string_view text, const Options& options = {});

}  // namespace frattini::catalog
