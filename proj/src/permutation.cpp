#include "frattini/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frattini/error.hpp"

namespace frattini {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || seen[y]) {
      throw DomainError("image table is not a bijection");
    }
    seen[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<long long>>& cycles,
                                     std::size_t degree) {
  if (degree == 0) throw DomainError("permutation degree must be positive");
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (long long x : cycle) {
      if (x < 1 || static_cast<std::size_t>(x) > degree) {
        throw DomainError("point " + std::to_string(x) + " out of range 1.." +
                          std::to_string(degree));
      }
      if (used[x - 1]) {
        throw DomainError("point " + std::to_string(x) + " repeated in cycle list");
      }
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto from = static_cast<Point>(cycle[i] - 1);
      auto to = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
      p.images_[from] = to;
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  // g^-1 p g maps g(x) to g(p(x)).
  if (g.degree() != degree()) throw DomainError("degree mismatch in conjugation");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[g.images_[x]] = g.images_[images_[x]];
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation Permutation::shifted(std::size_t shift, std::size_t new_degree) const {
  if (shift + degree() > new_degree) throw DomainError("shifted permutation does not fit");
  Permutation r(new_degree);
  for (std::size_t x = 0; x < degree(); ++x) r.images_[x + shift] = static_cast<Point>(images_[x] + shift);
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()));
  }
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t x = 0; x < r.images_.size(); ++x) r.images_[x] = q.images_[p.images_[x]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace frattini
