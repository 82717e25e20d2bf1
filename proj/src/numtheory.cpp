#include "frattini/numtheory.hpp"

#include <numeric>
#include <string>

#include "frattini/error.hpp"

namespace frattini::numtheory {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  Factorization out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::size_t distinct_prime_count(std::uint64_t n) { return factorize(n).size(); }

bool is_squarefree(std::uint64_t n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && factorize(n).size() == 1; }

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = prime_divisors(p - 1);
  for (std::uint64_t r = 2; r < p; ++r) {
    bool generates = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(r, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return r;
  }
  throw Error("no primitive root found");  // unreachable for prime p
}

std::uint64_t crt(const std::vector<std::uint64_t>& residues,
                  const std::vector<std::uint64_t>& moduli) {
  if (residues.size() != moduli.size()) throw DomainError("crt: residue/modulus count mismatch");
  std::uint64_t x = 0;
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const std::uint64_t mi = moduli[i];
    if (mi == 0) throw DomainError("crt: zero modulus");
    if (std::gcd(m, mi) != 1) throw DomainError("crt: moduli are not pairwise coprime");
    // Solve x + m*t = r (mod mi) for t.
    const std::uint64_t r = residues[i] % mi;
    const std::uint64_t diff = (r + mi - x % mi) % mi;
    // inverse of m mod mi by extended Euclid
    long long a = static_cast<long long>(m % mi), b = static_cast<long long>(mi);
    long long u = 1, v = 0;
    while (b != 0) {
      long long q = a / b;
      a -= q * b;
      std::swap(a, b);
      u -= q * v;
      std::swap(u, v);
    }
    const std::uint64_t inv = mi == 1 ? 0 : static_cast<std::uint64_t>((u % static_cast<long long>(mi) + static_cast<long long>(mi)) % static_cast<long long>(mi));
    const std::uint64_t t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(diff) * inv % mi);
    x += m * t;
    m *= mi;
  }
  return x;
}

}  // namespace frattini::numtheory
