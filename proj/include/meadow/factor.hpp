#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace meadow {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of |n| in increasing order; empty for 0 and ±1.
/// Trial division by small primes, then Pollard-Brent rho on the cofactor.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

/// Largest squarefree divisor of |n| (1 for n = 0).
mpz_class squarefree_kernel(const mpz_class& n);

}  // namespace meadow
