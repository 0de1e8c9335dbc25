#include "sidon/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sidon::nt {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 ipow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) throw std::overflow_error("ipow overflow");
    result *= base;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      factor_into(n / p, out);
      return;
    }
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  std::vector<u64> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization result;
  for (u64 p : primes) {
    if (!result.empty() && result.back().first == p)
      ++result.back().second;
    else
      result.emplace_back(p, 1);
  }
  return result;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

bool is_squarefree(u64 n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

u64 gcd(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

Bezout ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::optional<u64> invmod(u64 a, u64 m) {
  auto [g, x, y] = ext_gcd(static_cast<i64>(a % m), static_cast<i64>(m));
  if (g != 1) return std::nullopt;
  return static_cast<u64>(mod(x, static_cast<i64>(m)));
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 iroot(u64 n, unsigned k) {
  if (k == 1 || n < 2) return n;
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
  auto pow_le = [&](u64 v) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= v;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

int kronecker(i64 a, u64 n) {
  if (n == 0) throw std::invalid_argument("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    i64 r = mod(a, 8);
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol for odd n.
  i64 nn = static_cast<i64>(n);
  i64 aa = mod(a, nn);
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      i64 r = nn % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(aa, nn);
    if (aa % 4 == 3 && nn % 4 == 3) result = -result;
    aa = mod(aa, nn);
  }
  return nn == 1 ? result : 0;
}

}  // namespace sidon::nt
