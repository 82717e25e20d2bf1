#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frattini/limits.hpp"
#include "frattini/permutation.hpp"

namespace frattini {

/**
 * A permutation group given by generators, with a base and strong generating
 * set built eagerly by deterministic Schreier-Sims. Immutable after
 * construction, so shared instances are safe to query concurrently.
 */
class PermGroup {
 public:
  // Trivial group on `degree` points.
  explicit PermGroup(std::size_t degree = 1);
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  // Degree is taken from the generators; throws DomainError on an empty list
  // or mixed degrees.
  static PermGroup from_generators(std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  bool contains(const Permutation& p) const;

  // All elements, sorted lexicographically by image tuple (identity first).
  std::vector<Permutation> elements(const Limits& limits = {}) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> basic_orbit_sizes() const;

  // Sifts p through the stabilizer chain. Returns the residue and the level
  // where sifting stopped (== base length when p passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& p, std::size_t from_level = 0) const;

  // Canonical element of the right coset (*this) * g: the element whose images
  // of the base points are lexicographically least.
  Permutation canonical_right_coset_rep(const Permutation& g) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;
  bool normalizes(const PermGroup& subgroup) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> strong_generators;
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;  // transversal[i] maps base_point to orbit[i]
    std::vector<std::int32_t> slot;        // point -> index into orbit, or -1
  };

  void build_chain();
  void compute_orbit(Level& level) const;
  const Permutation& transversal_for(const Level& level, Point y) const {
    return level.transversal[static_cast<std::size_t>(level.slot[y])];
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

// <seed> on `ambient_degree` points.
PermGroup closure(std::size_t ambient_degree, const std::vector<Permutation>& seed);

// Generators of H conjugated by g (points relabelled through g: h -> g^-1 h g
// under left-to-right composition). Order is preserved.
PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& g);

// Orbits on 0-based points, each sorted, ordered by least point.
std::vector<std::vector<Point>> orbits(const PermGroup& g);

/**
 * Right cosets H*x of a subgroup H in G, enumerated by orbit search from the
 * trivial coset. Each coset is keyed by its canonical representative, so
 * index_of() is a hash lookup after a short sift.
 */
class RightCosetSpace {
 public:
  RightCosetSpace(const PermGroup& g, const PermGroup& h, const Limits& limits = {});

  std::size_t size() const noexcept { return reps_.size(); }
  const Permutation& rep(std::size_t i) const { return reps_[i]; }
  std::size_t index_of(const Permutation& x) const;
  std::size_t act(std::size_t coset, const Permutation& x) const { return index_of(reps_[coset] * x); }

  // generator_action()[k][c] = index of coset c * (k-th generator of G).
  const std::vector<std::vector<std::uint32_t>>& generator_action() const noexcept { return action_; }

  // Orbits of H acting on the cosets by right multiplication; each orbit is
  // one double coset H x H. Returns one representative coset index per orbit.
  std::vector<std::size_t> double_coset_reps() const;

 private:
  PermGroup subgroup_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::vector<std::uint32_t>> action_;
};

// Image of G acting on the right cosets of a normal subgroup N; isomorphic to
// G/N. Throws DomainError if N is not a normal subgroup of G, BoundExceeded if
// the index exceeds limits.index_bound.
PermGroup coset_action(const PermGroup& g, const PermGroup& n, const Limits& limits = {});

}  // namespace frattini
