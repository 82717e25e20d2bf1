#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace frattini {

using Point = std::uint32_t;

/**
 * A bijection of {1..degree}, stored 0-based.
 *
 * Composition is left-to-right: `compose(p, q)` (also `p * q`) applies p
 * first, then q, so x^(p*q) = q(p(x)). This convention is used everywhere in
 * the library, including conjugation: `p.conjugated_by(g)` is g^-1 * p * g,
 * which relabels the points of p through g.
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  // 0-based image table; throws DomainError unless it is a bijection.
  static Permutation from_images(std::vector<Point> images);

  // Product of disjoint cycles written with 1-based points.
  static Permutation from_cycles(const std::vector<std::vector<long long>>& cycles,
                                 std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  Permutation conjugated_by(const Permutation& g) const;
  std::uint64_t order() const;

  // Smallest point moved, or degree() if identity.
  Point first_moved_point() const noexcept;

  // Nontrivial cycles, 1-based, each starting at its least point, sorted by
  // that point.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  // Same permutation on degree + shift points, moving only [shift, shift+degree).
  Permutation shifted(std::size_t shift, std::size_t new_degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  std::vector<Point> images_;
};

// p first, then q. Throws DomainError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace frattini
