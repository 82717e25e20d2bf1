#include "frattini/symmetric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <limits>

#include "frattini/error.hpp"
#include "frattini/numtheory.hpp"
#include "frattini/subgroups.hpp"

namespace frattini {

namespace {

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) throw BoundExceeded("factorial overflows 64 bits");
    f *= i;
  }
  return f;
}

// Uniform in [0, n) independent of the standard library's distributions.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = top - top % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = degree; i > 1; --i) std::swap(images[i - 1], images[bounded(rng, i)]);
  return Permutation::from_images(std::move(images));
}

Permutation cycle_on(std::size_t degree, const std::vector<Point>& points) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i) images[points[i]] = points[(i + 1) % points.size()];
  return Permutation::from_images(std::move(images));
}

Permutation product(const Permutation& p, const Permutation& q) { return p * q; }

// Generators of the full symmetric group on `points`.
void add_symmetric_on(std::size_t degree, const std::vector<Point>& points, std::vector<Permutation>& gens) {
  if (points.size() < 2) return;
  gens.push_back(cycle_on(degree, points));
  if (points.size() > 2) gens.push_back(cycle_on(degree, {points[0], points[1]}));
}

// Split of the points visited by the step sequence into a cycle of length
// `first` and one of length n - first, plus a transposition in each.
std::optional<std::vector<Permutation>> split_generators(std::size_t n, const std::vector<Point>& pts,
                                                         std::size_t first, bool joint_transpositions) {
  if (std::set<Point>(pts.begin(), pts.end()).size() != n) return std::nullopt;
  const std::vector<Point> c1(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(first));
  const std::vector<Point> c2(pts.begin() + static_cast<std::ptrdiff_t>(first), pts.end());
  const Permutation alpha = product(cycle_on(n, c1), cycle_on(n, c2));
  const Permutation t1 = cycle_on(n, {c1[0], c1[1]});
  const Permutation t2 = cycle_on(n, {c2[0], c2[1]});
  if (joint_transpositions) return std::vector<Permutation>{alpha, product(t1, t2)};
  return std::vector<Permutation>{alpha, t1, t2};
}

std::uint64_t offset(std::uint64_t n, std::uint64_t j, std::uint64_t m) {
  const std::uint64_t d = std::gcd(n, j);
  return d == 1 ? 0 : m * d / n;
}

struct MemberCheck {
  bool shaped = false;   // orbit sizes {a, b} and order a! b!
  bool maximal = false;
  std::vector<bool> large_side;  // point -> lies in the orbit of size a
};

MemberCheck check_member(const PermGroup& sn, const PermGroup& m, std::uint64_t a, std::uint64_t b,
                         const Limits& limits) {
  MemberCheck out;
  const auto orbs = orbits(m);
  if (orbs.size() != 2) return out;
  const auto& large = orbs[0].size() == a ? orbs[0] : orbs[1];
  const auto& small = orbs[0].size() == a ? orbs[1] : orbs[0];
  if (large.size() != a || small.size() != b) return out;
  if (m.order() != factorial(a) * factorial(b)) return out;
  out.shaped = true;
  out.large_side.assign(sn.degree(), false);
  for (Point x : large) out.large_side[x] = true;
  Limits wide = limits;
  wide.index_bound = std::max<std::uint64_t>(limits.index_bound, sn.order() / m.order());
  out.maximal = is_maximal(sn, m, wide);
  return out;
}

// Order of the stabilizer of the common refinement of the splits.
std::uint64_t refinement_order(const std::vector<MemberCheck>& checks, std::size_t n) {
  std::map<std::vector<bool>, std::uint64_t> cells;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> pattern;
    for (const auto& c : checks) pattern.push_back(c.large_side[x]);
    ++cells[pattern];
  }
  std::uint64_t order = 1;
  for (const auto& [pattern, size] : cells) order *= factorial(size);
  return order;
}

std::optional<WitnessFamily> assess(const PermGroup& sn, std::vector<PermGroup> members, std::uint64_t a,
                                    std::uint64_t b, const Limits& limits, std::string& why) {
  std::vector<MemberCheck> checks;
  for (std::size_t i = 0; i < members.size(); ++i) {
    checks.push_back(check_member(sn, members[i], a, b, limits));
    if (!checks.back().shaped) {
      why = "member " + std::to_string(i + 1) + " is not the stabilizer of a " + std::to_string(b) + "-set";
      return std::nullopt;
    }
    if (!checks.back().maximal) {
      why = "member " + std::to_string(i + 1) + " is not maximal";
      return std::nullopt;
    }
  }
  const std::uint64_t meet = refinement_order(checks, sn.degree());
  if (meet != 1) {
    why = "intersection has order " + std::to_string(meet);
    return std::nullopt;
  }
  WitnessFamily family{sn, std::move(members), {}};
  family.checks.each_is_subgroup = true;
  family.checks.each_is_maximal = true;
  family.checks.intersection_order = 1;
  family.checks.frattini_order = 1;
  family.checks.intersection_equals_frattini = true;
  return family;
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  std::vector<Permutation> gens;
  add_symmetric_on(n, all, gens);
  return PermGroup(n, gens);
}

std::string type_name(const std::string& stem, std::uint64_t x, std::uint64_t y) {
  return stem + "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

void add_candidate(std::vector<SymmetricMaximalType>& pool, std::string name, std::size_t n,
                   std::vector<Permutation> gens) {
  pool.push_back({std::move(name), PermGroup(n, std::move(gens))});
}

std::vector<SymmetricMaximalType> pool_candidates(std::size_t n) {
  std::vector<SymmetricMaximalType> pool;
  for (std::size_t k = 1; 2 * k < n; ++k) {
    std::vector<Point> left(k), right(n - k);
    std::iota(left.begin(), left.end(), Point{0});
    std::iota(right.begin(), right.end(), static_cast<Point>(k));
    std::vector<Permutation> gens;
    add_symmetric_on(n, left, gens);
    add_symmetric_on(n, right, gens);
    add_candidate(pool, "S" + std::to_string(k) + "xS" + std::to_string(n - k), n, std::move(gens));
  }
  for (std::size_t m = 2; 2 * m <= n; ++m) {
    if (n % m != 0) continue;
    std::vector<Point> block(m);
    std::iota(block.begin(), block.end(), Point{0});
    std::vector<Permutation> gens;
    add_symmetric_on(n, block, gens);
    std::vector<Point> shift(n), swap(n);
    for (std::size_t x = 0; x < n; ++x) {
      shift[x] = static_cast<Point>((x + m) % n);
      swap[x] = static_cast<Point>(x < m ? x + m : x < 2 * m ? x - m : x);
    }
    gens.push_back(Permutation::from_images(shift));
    if (n / m > 2) gens.push_back(Permutation::from_images(swap));
    add_candidate(pool, "S" + std::to_string(m) + "wrS" + std::to_string(n / m), n, std::move(gens));
  }
  const auto factors = numtheory::factorize(n);
  if (factors.size() == 1) {
    // Affine group on vectors of length d over F_p, point = sum x_i p^i.
    const std::uint64_t p = factors[0].first;
    const std::size_t d = factors[0].second;
    auto digits = [&](std::size_t x) {
      std::vector<std::uint64_t> v(d);
      for (std::size_t i = 0; i < d; ++i, x /= p) v[i] = x % p;
      return v;
    };
    auto point = [&](const std::vector<std::uint64_t>& v) {
      std::size_t x = 0;
      for (std::size_t i = d; i-- > 0;) x = x * p + v[i];
      return static_cast<Point>(x);
    };
    auto linear = [&](auto&& map) {
      std::vector<Point> images(n);
      for (std::size_t x = 0; x < n; ++x) {
        auto v = digits(x);
        map(v);
        images[x] = point(v);
      }
      return Permutation::from_images(std::move(images));
    };
    std::vector<Permutation> gens;
    gens.push_back(linear([&](auto& v) { v[0] = (v[0] + 1) % p; }));
    if (p > 2) {
      const std::uint64_t r = numtheory::primitive_root(p);
      gens.push_back(linear([&](auto& v) { v[0] = v[0] * r % p; }));
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (i != j) gens.push_back(linear([&](auto& v) { v[i] = (v[i] + v[j]) % p; }));
      }
    }
    add_candidate(pool, type_name("AGL", d, p), n, std::move(gens));
  }
  if (n >= 6 && numtheory::is_prime(n - 1)) {
    // PGL(2, q) on the projective line; point q is infinity.
    const std::uint64_t q = n - 1;
    const std::uint64_t r = numtheory::primitive_root(q);
    std::vector<Point> translate(n), scale(n), invert(n);
    for (std::uint64_t x = 0; x < q; ++x) {
      translate[x] = static_cast<Point>((x + 1) % q);
      scale[x] = static_cast<Point>(x * r % q);
      invert[x] = static_cast<Point>(x == 0 ? q : (q - numtheory::pow_mod(x, q - 2, q)) % q);
    }
    translate[q] = scale[q] = static_cast<Point>(q);
    invert[q] = 0;
    add_candidate(pool, type_name("PGL", 2, q), n,
                  {Permutation::from_images(translate), Permutation::from_images(scale),
                   Permutation::from_images(invert)});
  }
  return pool;
}

void next_choice(std::vector<std::size_t>& choice, std::size_t types, bool& done) {
  for (std::size_t i = choice.size(); i-- > 0;) {
    if (choice[i] + 1 < types) {
      ++choice[i];
      for (std::size_t j = i + 1; j < choice.size(); ++j) choice[j] = choice[i];
      return;
    }
  }
  done = true;
}

}  // namespace

std::uint64_t symmetric_large_part(std::uint64_t n) { return (n + 2) / 2; }
std::uint64_t symmetric_small_part(std::uint64_t n) { return n == 0 ? 0 : (n - 1) / 2; }

std::optional<std::vector<std::vector<Permutation>>> symmetric_literal_generators(std::uint64_t n) {
  if (n < 4) throw DomainError("symmetric witnesses need n >= 4");
  if (n == 4 || n == 6) return std::nullopt;
  const std::uint64_t a = symmetric_large_part(n);
  const std::uint64_t b = symmetric_small_part(n);
  const std::uint64_t count = (n + 8) / 4;
  std::vector<std::vector<Permutation>> out;
  auto add = [&](std::vector<Point> pts, std::size_t first, bool joint) {
    auto gens = split_generators(n, pts, first, joint);
    if (!gens) return false;
    out.push_back(std::move(*gens));
    return true;
  };
  if (n % 2 == 1) {
    for (std::uint64_t j = 0; j < count; ++j) {
      std::vector<Point> pts(n);
      for (std::uint64_t m = 0; m < n; ++m) {
        pts[m] = static_cast<Point>(j == 0 ? m : (2 * m * j + offset(n, j, m)) % n);
      }
      if (!add(std::move(pts), a, true)) return std::nullopt;
    }
    return out;
  }
  for (std::uint64_t j : {std::uint64_t{1}, n - 1}) {
    std::vector<Point> pts(n);
    for (std::uint64_t m = 0; m < n; ++m) pts[m] = static_cast<Point>(m * j % n);
    if (!add(std::move(pts), b, false)) return std::nullopt;
  }
  const std::uint64_t t = n / 2 + 3;
  std::uint64_t start = (t - 1) / 2;
  while (start > 1 && std::gcd(start, t) != 1) --start;
  for (std::uint64_t j = start; j <= start + (n - 4) / 4; ++j) {
    std::vector<Point> pts(n);
    for (std::uint64_t m = 0; m < n; ++m) pts[m] = static_cast<Point>((m * j + offset(n, j, m)) % n);
    if (!add(std::move(pts), a, false)) return std::nullopt;
  }
  return out;
}

SymmetricWitnesses symmetric_witnesses(std::uint64_t n, const SymmetricWitnessOptions& options,
                                       const Limits& limits) {
  if (n < 4 || n > options.max_degree) {
    throw DomainError("symmetric witnesses need 4 <= n <= " + std::to_string(options.max_degree));
  }
  const std::uint64_t a = symmetric_large_part(n);
  const std::uint64_t b = symmetric_small_part(n);
  const std::size_t count = static_cast<std::size_t>((n + 8) / 4);
  const PermGroup sn = symmetric_group(n);

  SymmetricWitnesses out{{sn, {}, {}}, WitnessPath::literal, "", 0};
  if (auto lists = symmetric_literal_generators(n)) {
    std::vector<PermGroup> members;
    for (auto& gens : *lists) members.emplace_back(n, std::move(gens));
    std::string why;
    if (auto family = assess(sn, std::move(members), a, b, limits, why)) {
      out.family = std::move(*family);
      return out;
    }
    out.literal_status = "explicit family rejected: " + why;
  } else {
    out.literal_status = n == 4 || n == 6 ? "no explicit family for n = " + std::to_string(n)
                                          : "explicit steps do not visit n distinct points";
  }

  out.path = WitnessPath::fallback;
  std::vector<Point> left(a), right(b);
  std::iota(left.begin(), left.end(), Point{0});
  std::iota(right.begin(), right.end(), static_cast<Point>(a));
  std::vector<Permutation> gens;
  add_symmetric_on(n, left, gens);
  add_symmetric_on(n, right, gens);
  const PermGroup natural(n, gens);

  std::mt19937_64 rng(options.seed);
  for (std::size_t attempt = 1; attempt <= options.fallback_attempts; ++attempt) {
    if ((attempt & 0xff) == 0) limits.check_deadline("symmetric witness search");
    std::vector<Permutation> moves{Permutation(n)};
    for (std::size_t i = 1; i < count; ++i) moves.push_back(random_permutation(rng, n));
    std::set<std::vector<bool>> patterns;
    for (Point x = 0; x < n; ++x) {
      std::vector<bool> pattern;
      for (const auto& g : moves) pattern.push_back(g.inverse()(x) < a);
      patterns.insert(std::move(pattern));
    }
    if (patterns.size() != n) continue;
    std::vector<PermGroup> members;
    for (const auto& g : moves) members.push_back(conjugate_subgroup(natural, g));
    std::string why;
    if (auto family = assess(sn, std::move(members), a, b, limits, why)) {
      out.family = std::move(*family);
      out.fallback_attempts_used = attempt;
      return out;
    }
  }
  out.fallback_attempts_used = options.fallback_attempts;
  throw Error("no S_a x S_b family for n = " + std::to_string(n) + ": " + out.literal_status +
              "; random conjugates failed after " + std::to_string(options.fallback_attempts) + " attempts");
}

std::vector<SymmetricMaximalType> symmetric_maximal_pool(std::uint64_t n, const Limits& limits) {
  if (n < 3) throw DomainError("maximal pool needs n >= 3");
  const PermGroup sn = symmetric_group(n);
  std::vector<SymmetricMaximalType> kept;
  for (auto& candidate : pool_candidates(n)) {
    if (sn.order() / candidate.group.order() > limits.index_bound) continue;
    if (is_maximal(sn, candidate.group, limits)) kept.push_back(std::move(candidate));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) {
    return x.group.order() != y.group.order() ? x.group.order() < y.group.order() : x.name < y.name;
  });
  return kept;
}

std::optional<PoolWitness> symmetric_pool_witness(std::uint64_t n, std::size_t size,
                                                  const std::vector<SymmetricMaximalType>& pool,
                                                  std::uint64_t seed, std::size_t attempts_per_choice,
                                                  const Limits& limits) {
  if (size == 0 || pool.empty()) return std::nullopt;
  const std::uint64_t group_order = factorial(n);
  std::mt19937_64 rng(seed);
  std::uint64_t attempts = 0;
  std::vector<std::size_t> choice(size, 0);
  std::map<std::size_t, std::vector<Permutation>> element_cache;
  for (bool done = false; !done; next_choice(choice, pool.size(), done)) {
    if (size == 2) {
      // |M1 cap M2| = 1 forces |M1| |M2| <= |G|.
      const auto o1 = pool[choice[0]].group.order();
      const auto o2 = pool[choice[1]].group.order();
      if (o1 > group_order / o2) continue;
    }
    auto& elements = element_cache[choice[0]];
    if (elements.empty()) elements = pool[choice[0]].group.elements(limits);
    for (std::size_t attempt = 0; attempt < attempts_per_choice; ++attempt) {
      ++attempts;
      limits.check_deadline("symmetric pool search");
      std::vector<Permutation> moves, back;
      for (std::size_t i = 1; i < size; ++i) {
        moves.push_back(random_permutation(rng, n));
        back.push_back(moves.back().inverse());
      }
      // x lies in g^-1 M g iff g x g^-1 lies in M.
      const bool trivial = std::none_of(elements.begin(), elements.end(), [&](const Permutation& x) {
        if (x.is_identity()) return false;
        for (std::size_t i = 1; i < size; ++i) {
          if (!pool[choice[i]].group.contains(x.conjugated_by(back[i - 1]))) return false;
        }
        return true;
      });
      if (!trivial) continue;
      PoolWitness out{{symmetric_group(n), {}, {}}, {}, attempts};
      out.family.members.push_back(pool[choice[0]].group);
      out.member_types.push_back(pool[choice[0]].name);
      for (std::size_t i = 1; i < size; ++i) {
        out.family.members.push_back(conjugate_subgroup(pool[choice[i]].group, moves[i - 1]));
        out.member_types.push_back(pool[choice[i]].name);
      }
      auto& checks = out.family.checks;
      checks.each_is_subgroup = true;
      checks.each_is_maximal = true;  // conjugates of maximal pool groups
      checks.intersection_order = 1;
      checks.frattini_order = 1;
      checks.intersection_equals_frattini = true;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace frattini
