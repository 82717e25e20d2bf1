#include "frattini/catalog.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "frattini/error.hpp"
#include "frattini/numtheory.hpp"

namespace frattini::catalog {

namespace {

// Points beyond this are not realistic for explicit permutations.
constexpr std::uint64_t kMaxDegree = 1u << 16;

void check_degree(std::uint64_t degree) {
  if (degree > kMaxDegree) {
    throw DomainError("degree " + std::to_string(degree) + " is too large");
  }
}

Permutation cycle_on(std::uint64_t first, std::uint64_t length, std::uint64_t degree) {
  std::vector<long long> cycle;
  for (std::uint64_t i = 0; i < length; ++i) cycle.push_back(static_cast<long long>(first + i));
  return Permutation::from_cycles({cycle}, degree);
}

}  // namespace

PermGroup symmetric(std::uint64_t n) {
  if (n < 1) throw DomainError("symmetric group needs n >= 1");
  check_degree(n);
  if (n == 1) return PermGroup(1);
  std::vector<Permutation> gens{cycle_on(1, n, n)};
  if (n > 2) gens.push_back(Permutation::from_cycles({{1, 2}}, n));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating(std::uint64_t n) {
  if (n < 3) throw DomainError("alternating group needs n >= 3");
  check_degree(n);
  std::vector<Permutation> gens{Permutation::from_cycles({{1, 2, 3}}, n)};
  if (n > 3) gens.push_back(n % 2 == 1 ? cycle_on(1, n, n) : cycle_on(2, n - 1, n));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic(std::uint64_t n) {
  if (n < 1) throw DomainError("cyclic group needs n >= 1");
  check_degree(n);
  if (n == 1) return PermGroup(1);
  return PermGroup(n, {cycle_on(1, n, n)});
}

PermGroup elementary_abelian(std::uint64_t p, std::uint64_t r) {
  if (!numtheory::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (r < 1) throw DomainError("elementary abelian group needs rank >= 1");
  check_degree(p * r);
  const std::uint64_t degree = p * r;
  std::vector<Permutation> gens;
  for (std::uint64_t i = 0; i < r; ++i) gens.push_back(cycle_on(i * p + 1, p, degree));
  return PermGroup(degree, std::move(gens));
}

PermGroup dihedral(std::uint64_t order, const Options& options) {
  if (order % 2 != 0 || order == 0) {
    throw DomainError("dihedral group order must be even, got " + std::to_string(order));
  }
  if (order < 6 && !options.allow_degenerate) {
    throw DomainError("dihedral group of order " + std::to_string(order) +
                      " is degenerate (use --allow-degenerate)");
  }
  if (order == 2) return PermGroup(2, {Permutation::from_cycles({{1, 2}}, 2)});
  if (order == 4) {
    return PermGroup(4, {Permutation::from_cycles({{1, 2}, {3, 4}}, 4),
                         Permutation::from_cycles({{1, 3}, {2, 4}}, 4)});
  }
  const std::uint64_t n = order / 2;
  check_degree(n);
  std::vector<Point> reflection(n);
  // 0-based: i -> -i mod n, i.e. 1-based i -> n + 2 - i mod n.
  for (std::uint64_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_on(1, n, n), Permutation::from_images(std::move(reflection))});
}

PermGroup dicyclic(std::uint64_t order, const Options& options) {
  if (order == 0 || order % 4 != 0) {
    throw DomainError("dicyclic group order must be divisible by 4, got " + std::to_string(order));
  }
  if (order < 8 && !options.allow_degenerate) {
    throw DomainError("dicyclic group of order " + std::to_string(order) +
                      " is degenerate (use --allow-degenerate)");
  }
  check_degree(order);
  const std::uint64_t two_n = order / 2;
  const std::uint64_t n = order / 4;
  // Element x^a y^b has index a + 2n*b.
  auto multiply = [&](std::uint64_t lhs, std::uint64_t rhs) -> std::uint64_t {
    std::uint64_t a = lhs % two_n, b = lhs / two_n;
    std::uint64_t c = rhs % two_n, d = rhs / two_n;
    if (b == 0) return (a + c) % two_n + two_n * d;
    // x^a y x^c = x^(a-c) y
    std::uint64_t e = (a + two_n - c) % two_n;
    if (d == 0) return e + two_n;
    return (e + n) % two_n;  // y^2 = x^n
  };
  auto regular = [&](std::uint64_t g) {
    std::vector<Point> images(order);
    for (std::uint64_t e = 0; e < order; ++e) images[e] = static_cast<Point>(multiply(e, g));
    return Permutation::from_images(std::move(images));
  };
  return PermGroup(order, {regular(1), regular(two_n)});
}

PermGroup frobenius(std::uint64_t p, const Options& options) {
  if (!numtheory::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p < 5 && !(p == 3 && options.allow_degenerate)) {
    throw DomainError("Frobenius group needs a prime p >= 5" +
                      std::string(p == 3 ? " (use --allow-degenerate for p = 3)" : ""));
  }
  check_degree(p);
  const std::uint64_t r = numtheory::primitive_root(p);
  // Point i (1-based) stands for the residue i mod p, so point p is 0.
  std::vector<Point> images(p);
  for (std::uint64_t i = 1; i <= p; ++i) {
    std::uint64_t image = (r * (i % p)) % p;
    images[i - 1] = static_cast<Point>(image == 0 ? p - 1 : image - 1);
  }
  return PermGroup(p, {cycle_on(1, p, p), Permutation::from_images(std::move(images))});
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t degree = g.degree() + h.degree();
  check_degree(degree);
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.shifted(0, degree));
  for (const auto& x : h.generators()) gens.push_back(x.shifted(g.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec;
    spec.factors.push_back(atom());
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_])));
      if (c != 'X') throw ParseError("expected 'x' between factors", pos_);
      ++pos_;
      spec.factors.push_back(atom());
    }
    return spec;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("integer too large", start);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", start);
    return value;
  }

  Atom atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("expected a group atom", pos_);
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_])));
    if (std::string_view("SAZDQFE").find(family) == std::string_view::npos) {
      throw ParseError(std::string("unknown group family '") + text_[pos_] + "'", pos_);
    }
    ++pos_;
    Atom a;
    a.family = family;
    a.first = integer();
    if (family == 'E') {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != '^') throw ParseError("expected '^' after E<p>", pos_);
      ++pos_;
      a.second = integer();
    }
    return a;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

PermGroup build_atom(const Atom& a, const Options& options) {
  switch (a.family) {
    case 'S': return symmetric(a.first);
    case 'A': return alternating(a.first);
    case 'Z': return cyclic(a.first);
    case 'D': return dihedral(a.first, options);
    case 'Q': return dicyclic(a.first, options);
    case 'F': return frobenius(a.first, options);
    case 'E': return elementary_abelian(a.first, a.second);
    default: throw DomainError(std::string("unknown group family '") + a.family + "'");
  }
}

void validate_atom(const Atom& a, const Options& options) {
  const std::string name = to_string(GroupSpec{{a}});
  auto fail = [&](const std::string& why) { throw DomainError(name + ": " + why); };
  switch (a.family) {
    case 'S':
    case 'Z':
      if (a.first < 1) fail("parameter must be >= 1");
      break;
    case 'A':
      if (a.first < 3) fail("alternating groups need n >= 3");
      break;
    case 'D':
      if (a.first % 2 != 0 || a.first == 0) fail("dihedral order must be even");
      if (a.first < 6 && !options.allow_degenerate) fail("degenerate dihedral order (needs --allow-degenerate)");
      break;
    case 'Q':
      if (a.first % 4 != 0 || a.first == 0) fail("dicyclic order must be divisible by 4");
      if (a.first < 8 && !options.allow_degenerate) fail("degenerate dicyclic order (needs --allow-degenerate)");
      break;
    case 'F':
      if (!numtheory::is_prime(a.first)) fail("parameter must be prime");
      if (a.first < 5 && !(a.first == 3 && options.allow_degenerate)) fail("Frobenius groups need p >= 5");
      break;
    case 'E':
      if (!numtheory::is_prime(a.first)) fail("parameter must be prime");
      if (a.second < 1) fail("rank must be >= 1");
      break;
    default:
      fail("unknown family");
  }
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GroupSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const Atom& a = spec.factors[i];
    if (i) out += 'x';
    out += a.family;
    out += std::to_string(a.first);
    if (a.family == 'E') out += "^" + std::to_string(a.second);
  }
  return out;
}

void validate(const GroupSpec& spec, const Options& options) {
  if (spec.factors.empty()) throw DomainError("empty group spec");
  for (const auto& a : spec.factors) validate_atom(a, options);
}

PermGroup build(const GroupSpec& spec, const Options& options) {
  validate(spec, options);
  PermGroup g = build_atom(spec.factors.front(), options);
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    g = direct_product(g, build_atom(spec.factors[i], options));
  }
  return g;
}

PermGroup build(std::string_view text, const Options& options) {
  return build(parse_group_spec(text), options);
}

}  // namespace frattini::catalog
