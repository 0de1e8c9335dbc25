#pragma once

// Elementary integer number theory used across the toolkit: primality,
// factorization, modular arithmetic with 128-bit intermediates.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sidon::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Factorization as (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<u64, unsigned>>;

bool is_prime(u64 n);
Factorization factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> primes_up_to(u64 limit);

/// Returns (p, d) with n = p^d, or nullopt when n is not a prime power.
std::optional<std::pair<u64, unsigned>> prime_power(u64 n);

bool is_squarefree(u64 n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 ipow(u64 base, unsigned exp);

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
struct Bezout {
  i64 g;
  i64 x;
  i64 y;
};
Bezout ext_gcd(i64 a, i64 b);

/// Inverse of a modulo m; nullopt if gcd(a, m) != 1.
std::optional<u64> invmod(u64 a, u64 m);

/// Floor of the integer square root.
u64 isqrt(u64 n);

/// Floor of the integer k-th root.
u64 iroot(u64 n, unsigned k);

/// Mathematical (non-negative) remainder.
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// Kronecker symbol (a / n) for n >= 1.
int kronecker(i64 a, u64 n);

}  // namespace sidon::nt
