#include "meadow/factor.hpp"

#include <algorithm>
#include <array>

namespace meadow {

namespace {

constexpr std::uint32_t kTrialBound = 1000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool probably_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

mpz_class brent_rho(const mpz_class& n, unsigned long c) {
  mpz_class y = 2, x, g = 1, q = 1, ys;
  std::size_t r = 1;
  constexpr std::size_t m = 64;
  auto step = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (std::size_t i = 0; i < r; ++i) y = step(y);
    std::size_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
        y = step(y);
        mpz_class diff = abs(x - y);
        q = (q * diff) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void split(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.push_back(n);
    return;
  }
  mpz_class d = n;
  for (unsigned long c = 1; d == n; ++c) d = brent_rho(n, c);
  split(d, out);
  split(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> primes;
  mpz_class rest = abs(n);
  if (rest <= 1) return primes;
  for (std::uint32_t p = 2; p < kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
    }
  }
  if (rest > 1) {
    std::vector<mpz_class> large;
    split(rest, large);
    primes.insert(primes.end(), large.begin(), large.end());
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

mpz_class squarefree_kernel(const mpz_class& n) {
  mpz_class kernel = 1;
  for (const auto& p : prime_divisors(n)) kernel *= p;
  return kernel;
}

}  // namespace meadow
