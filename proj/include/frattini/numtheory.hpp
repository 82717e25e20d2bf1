#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace frattini::numtheory {

// (prime, exponent) pairs with strictly increasing primes.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n);

// Trial division. factorize(1) is empty; factorize(0) throws DomainError.
Factorization factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::size_t distinct_prime_count(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
bool is_power_of(std::uint64_t n, std::uint64_t p);
bool is_prime_power(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Least r in [1, p) with multiplicative order p - 1 modulo p.
std::uint64_t primitive_root(std::uint64_t p);

// Unique x in [0, prod moduli) with x = residues[i] mod moduli[i].
std::uint64_t crt(const std::vector<std::uint64_t>& residues,
                  const std::vector<std::uint64_t>& moduli);

}  // namespace frattini::numtheory
