#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frattini/limits.hpp"
#include "frattini/perm_group.hpp"
#include "frattini/witness.hpp"

namespace frattini {

inline constexpr std::uint64_t kDefaultSeed = 20'240'611;

// Sizes of the two orbits of the intransitive maximal subgroups used below:
// a = ceil((n + 1) / 2), b = floor((n - 1) / 2).
std::uint64_t symmetric_large_part(std::uint64_t n);
std::uint64_t symmetric_small_part(std::uint64_t n);

// Generator lists of the explicit S_a x S_b family built from the n-cycle
// (1, 2, ..., n). Odd n: one subgroup per step 2j (j = 0 uses step 1). Even
// n >= 8: steps 1 and n - 1 with the short cycle first, then the run of steps
// starting at the largest integer below (n/2 + 3)/2 coprime to n/2 + 3.
// Returns nothing for n in {4, 6} (no explicit family) or when a step does
// not visit n distinct points.
std::optional<std::vector<std::vector<Permutation>>> symmetric_literal_generators(std::uint64_t n);

struct SymmetricWitnessOptions {
  std::uint64_t max_degree = 16;
  std::uint64_t seed = kDefaultSeed;
  std::size_t fallback_attempts = 10'000;
};

enum class WitnessPath { literal, fallback };

struct SymmetricWitnesses {
  WitnessFamily family;
  WitnessPath path = WitnessPath::literal;
  std::string literal_status;  // why the explicit family was not used, if it was not
  std::size_t fallback_attempts_used = 0;
};

// At most floor((n + 8) / 4) subgroups of S_n, each the full stabilizer of a
// b-subset (checked as: orbit sizes {a, b}, order a! b!, maximal), with
// trivial intersection. Tries the explicit family first, then seeded random
// conjugates of the stabilizer of {1..a}.
//
// Members are full set stabilizers, so the intersection is the stabilizer of
// the common refinement of the splits; it is trivial iff every point has its
// own pattern of sides.
//
// Throws Error naming both paths when neither yields a family.
SymmetricWitnesses symmetric_witnesses(std::uint64_t n, const SymmetricWitnessOptions& options = {},
                                       const Limits& limits = {});

// A maximal subgroup type of S_n: stabilizers of a k-subset or of a block
// system, affine groups on p^d points, PGL(2, q) on the projective line.
struct SymmetricMaximalType {
  std::string name;
  PermGroup group;
};

// Candidate types for n, keeping only those that pass is_maximal (index
// checked against limits.index_bound; larger ones are skipped). Sorted by
// order, then name.
std::vector<SymmetricMaximalType> symmetric_maximal_pool(std::uint64_t n, const Limits& limits = {});

struct PoolWitness {
  WitnessFamily family;
  std::vector<std::string> member_types;
  std::uint64_t attempts = 0;
};

// Searches for `size` maximal subgroups of S_n with trivial intersection:
// for each multiset of pool types the first member is the pool group itself
// and the rest are seeded random conjugates. Deterministic for a fixed seed.
std::optional<PoolWitness> symmetric_pool_witness(std::uint64_t n, std::size_t size,
                                                  const std::vector<SymmetricMaximalType>& pool,
                                                  std::uint64_t seed, std::size_t attempts_per_choice,
                                                  const Limits& limits = {});

}  // namespace frattini
